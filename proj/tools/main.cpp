#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dqlin/decomposition.hpp"
#include "dqlin/determinant.hpp"
#include "dqlin/errors.hpp"
#include "dqlin/json_io.hpp"
#include "dqlin/matrix.hpp"
#include "dqlin/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitSizeCap = 4;
constexpr int kExitInternal = 5;

std::string fmt_dual(const dqlin::DualNumber& a) {
    return std::to_string(a.s) + (a.d >= 0 ? " + " : " - ") +
           std::to_string(std::abs(a.d)) + "e";
}

int run_det(const std::string& file, const std::string& method, int k, int anchor,
            int cap) {
    const dqlin::DQMatrix a = dqlin::load_matrix(file);
    dqlin::DetResult r;
    if (method == "moore") {
        r = dqlin::moore_det(a, cap);
    } else if (method == "chen") {
        r = dqlin::chen_det(a, cap);
    } else if (method == "dyson") {
        r = dqlin::moore_det_dyson(a, k, cap);
    } else if (method == "krow") {
        r = dqlin::kyrchei_det(a, dqlin::KyrcheiMode::Row, anchor, cap);
    } else if (method == "kcol") {
        r = dqlin::kyrchei_det(a, dqlin::KyrcheiMode::Column, anchor, cap);
    } else if (method == "quasi") {
        const dqlin::DualNumber q = dqlin::quasi_det(a);
        r.value = dqlin::DualQuaternion{q};
        r.as_dual_number = q;
        r.definition = dqlin::DetDefinition::Quasi;
        r.term_count = 0;
    } else {
        throw dqlin::InputError("unknown method: " + method);
    }
    std::cout << dqlin::det_result_to_json(r);
    std::cerr << "det(" << dqlin::det_definition_name(r.definition) << ") of " << a.rows()
              << "x" << a.cols() << " matrix";
    if (r.as_dual_number)
        std::cerr << " = " << fmt_dual(*r.as_dual_number);
    std::cerr << "\n";
    return kExitOk;
}

int run_eig(const std::string& file, bool vectors) {
    const dqlin::DQMatrix a = dqlin::load_matrix(file);
    const dqlin::Spectrum s = dqlin::hermitian_eig(a, vectors);
    std::cout << dqlin::spectrum_to_json(s);
    std::cerr << "eigenvalues:";
    for (const auto& ev : s.eigenvalues) std::cerr << " [" << fmt_dual(ev) << "]";
    if (s.vectors_refused)
        std::cerr << " (eigenvectors refused: repeated standard eigenvalue)";
    std::cerr << "\n";
    return kExitOk;
}

int run_charpoly(const std::string& file, int cap) {
    const dqlin::DQMatrix a = dqlin::load_matrix(file);
    const dqlin::DualPolynomial p = dqlin::char_poly(a, cap);
    const dqlin::Spectrum s = dqlin::hermitian_eig(a);
    bool repeated = false;
    for (size_t i = 0; i + 1 < s.cluster_map.size(); ++i)
        if (s.cluster_map[i] == s.cluster_map[i + 1]) repeated = true;
    std::cout << dqlin::polynomial_to_json(p, repeated);
    std::cerr << "characteristic polynomial of degree " << p.degree();
    if (repeated)
        std::cerr << "; repeated standard eigenvalue present, so some polynomial "
                     "roots are not eigenvalues";
    std::cerr << "\n";
    return kExitOk;
}

int run_verify(int n, int trials, uint64_t seed, const std::string& filter, int cap) {
    const dqlin::VerifyReport report = dqlin::run_verify(n, trials, seed, filter, cap);
    std::cout << dqlin::verify_report_to_json(report);
    for (const auto& rec : report.records)
        std::cerr << (rec.failures == 0 ? "PASS" : "FAIL") << " " << rec.id << " ("
                  << rec.trials << " trials, max discrepancy " << rec.max_discrepancy
                  << ")\n";
    std::cerr << (report.pass ? "all properties passed" : "some properties FAILED")
              << "\n";
    return report.pass ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Determinants and spectra of dual quaternion Hermitian matrices"};
    app.require_subcommand(1);

    std::string file;
    std::string method = "moore";
    int k = 1;
    int anchor = 1;
    int cap = dqlin::kDetCap;
    bool vectors = false;
    int n = 3;
    int trials = 50;
    uint64_t seed = 1;
    std::string filter;

    CLI::App* det = app.add_subcommand("det", "Compute a determinant");
    det->add_option("file", file, "Matrix JSON file")->required();
    det->add_option("--method", method,
                    "One of: moore, chen, dyson, krow, kcol, quasi");
    det->add_option("--k", k, "Expansion index for --method dyson (1-based)");
    det->add_option("--anchor", anchor, "Anchor index for krow/kcol (1-based)");
    det->add_option("--cap", cap, "Size cap override");

    CLI::App* eig = app.add_subcommand("eig", "Compute the spectrum");
    eig->add_option("file", file, "Matrix JSON file")->required();
    eig->add_flag("--vectors", vectors, "Also compute eigenvectors");

    CLI::App* charpoly = app.add_subcommand("charpoly",
                                            "Compute the characteristic polynomial");
    charpoly->add_option("file", file, "Matrix JSON file")->required();
    charpoly->add_option("--cap", cap, "Size cap override");

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--n", n, "Matrix size for randomized trials");
    verify->add_option("--trials", trials, "Trials per property");
    verify->add_option("--seed", seed, "Base random seed");
    verify->add_option("--filter", filter, "Run only the property with this id");
    verify->add_option("--cap", cap, "Size cap override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (det->parsed()) return run_det(file, method, k, anchor, cap);
        if (eig->parsed()) return run_eig(file, vectors);
        if (charpoly->parsed()) return run_charpoly(file, cap);
        if (verify->parsed()) return run_verify(n, trials, seed, filter, cap);
    } catch (const dqlin::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const dqlin::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const dqlin::SizeCapError& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return kExitSizeCap;
    } catch (const dqlin::SingularError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
