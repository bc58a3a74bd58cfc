#include "dqlin/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dqlin {

namespace {

using nlohmann::json;

json dq_to_json(const DualQuaternion& q) {
    return json::array({q.s.w, q.s.x, q.s.y, q.s.z, q.d.w, q.d.x, q.d.y, q.d.z});
}

json dn_to_json(const DualNumber& a) { return json::array({a.s, a.d}); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

DQMatrix parse_matrix_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("matrix parse: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw InputError("matrix parse: expected object with \"n\" and \"entries\"");
    if (!j["n"].is_number_integer())
        throw InputError("matrix parse: \"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1)
        throw InputError("matrix parse: n must be positive");
    const json& rows = j["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw InputError("matrix parse: expected " + std::to_string(n) + " rows");
    DQMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InputError("matrix parse: row " + std::to_string(i + 1) +
                             " must have " + std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c) {
            const json& e = row[static_cast<size_t>(c)];
            if (!e.is_array() || e.size() != 8)
                throw InputError("matrix parse: entry (" + std::to_string(i + 1) + "," +
                                 std::to_string(c + 1) + ") must be an array of 8 numbers");
            double v[8];
            for (size_t t = 0; t < 8; ++t) {
                if (!e[t].is_number())
                    throw InputError("matrix parse: non-numeric component");
                v[t] = e[t].get<double>();
                if (!std::isfinite(v[t]))
                    throw InputError("matrix parse: non-finite component");
            }
            a(i, c) = DualQuaternion{Quaternion{v[0], v[1], v[2], v[3]},
                                     Quaternion{v[4], v[5], v[6], v[7]}};
        }
    }
    return a;
}

DQMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

std::string matrix_to_json(const DQMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < a.cols(); ++c) row.push_back(dq_to_json(a(i, c)));
        rows.push_back(std::move(row));
    }
    return dump(json{{"n", a.rows()}, {"entries", std::move(rows)}});
}

std::string det_result_to_json(const DetResult& r) {
    json j{{"definition", det_definition_name(r.definition)},
           {"value", dq_to_json(r.value)},
           {"term_count", r.term_count}};
    j["dual_number"] = r.as_dual_number ? dn_to_json(*r.as_dual_number) : json(nullptr);
    return dump(j);
}

std::string spectrum_to_json(const Spectrum& s) {
    json vals = json::array();
    for (const auto& ev : s.eigenvalues) vals.push_back(dn_to_json(ev));
    json j{{"eigenvalues", std::move(vals)}, {"cluster_map", s.cluster_map}};
    bool repeated = false;
    for (size_t i = 0; i + 1 < s.cluster_map.size(); ++i)
        if (s.cluster_map[i] == s.cluster_map[i + 1]) repeated = true;
    if (repeated)
        j["note"] = "repeated standard eigenvalue: the characteristic polynomial "
                    "has roots that are not eigenvalues";
    if (s.eigenvectors) {
        json rows = json::array();
        const DQMatrix& u = *s.eigenvectors;
        for (int i = 0; i < u.rows(); ++i) {
            json row = json::array();
            for (int c = 0; c < u.cols(); ++c) row.push_back(dq_to_json(u(i, c)));
            rows.push_back(std::move(row));
        }
        j["eigenvectors"] = std::move(rows);
    }
    j["vectors_refused"] = s.vectors_refused;
    return dump(j);
}

std::string polynomial_to_json(const DualPolynomial& p, bool repeated_note) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients) coeffs.push_back(dn_to_json(c));
    json j{{"degree", p.degree()}, {"coefficients", std::move(coeffs)}};
    if (repeated_note)
        j["note"] = "repeated standard eigenvalue: the characteristic polynomial "
                    "has roots that are not eigenvalues";
    return dump(j);
}

std::string verify_report_to_json(const VerifyReport& r) {
    json recs = json::array();
    for (const auto& rec : r.records) {
        recs.push_back(json{{"property", rec.id},
                            {"description", rec.description},
                            {"trials", rec.trials},
                            {"failures", rec.failures},
                            {"max_discrepancy", rec.max_discrepancy},
                            {"seed", rec.seed}});
    }
    return dump(json{{"n", r.n},
                     {"trials", r.trials},
                     {"seed", r.seed},
                     {"properties", std::move(recs)},
                     {"pass", r.pass}});
}

} // namespace dqlin
