#pragma once

#include <string>

#include "ncm/matrix.hpp"

// Matrix file format, shared by every CLI command:
//   {"n": <int>, "entries": [[{"re": <float>, "im": <float>}, ...], ...]}
// row-major. Numbers are written with 17 significant digits so files
// round-trip bit-identically.

namespace ncm::io {

// shortest fixed-precision decimal that round-trips a double
std::string format_double(double v);

std::string matrix_to_json(const ComplexMatrix& m);

// Throws std::invalid_argument with 1-based row/column positions on
// malformed entries.
ComplexMatrix matrix_from_json(const std::string& text);

ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const ComplexMatrix& m, const std::string& path);

}  // namespace ncm::io
