#pragma once

#include <string>

#include "dqlin/decomposition.hpp"
#include "dqlin/determinant.hpp"
#include "dqlin/matrix.hpp"
#include "dqlin/verify.hpp"

namespace dqlin {

// Matrix file format: {"n": int, "entries": [[[8 numbers] x n] x n]} with
// each entry [s0,s1,s2,s3,d0,d1,d2,d3] (standard w,x,y,z then dual
// w,x,y,z).  The reader validates shape and finiteness.
DQMatrix parse_matrix_json(const std::string& text);
DQMatrix load_matrix(const std::string& path);
std::string matrix_to_json(const DQMatrix& a);

std::string det_result_to_json(const DetResult& r);
// `repeated_note` adds a caution that polynomial roots exceed the
// eigenvalue list when a standard eigenvalue repeats.
std::string spectrum_to_json(const Spectrum& s);
std::string polynomial_to_json(const DualPolynomial& p, bool repeated_note);
std::string verify_report_to_json(const VerifyReport& r);

} // namespace dqlin
