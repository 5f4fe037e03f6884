#pragma once

#include <complex>
#include <string>

#include "numrange/bounds.hpp"
#include "numrange/matrix.hpp"
#include "numrange/polygon.hpp"

namespace numrange::io {

using Matrix = ComplexMatrix<double>;

// Reads a matrix from either supported format, sniffing by the first
// non-space character ('{' means JSON, anything else the text grid).
// Throws ParseError with a message naming what is wrong.
Matrix read_matrix_file(const std::string& path);
Matrix parse_matrix(const std::string& text);

// JSON object {"dim": m, "entries": [[re, im], ...]} with entries in
// row-major order.
Matrix parse_matrix_json(const std::string& text);

// Whitespace-separated complex literals like 2-4i, one matrix row per
// line; blank lines and lines starting with '#' are skipped.
Matrix parse_matrix_grid(const std::string& text);

// One token of the grid format.
std::complex<double> parse_complex_token(const std::string& token);

// Emits the JSON form.  Every entry is printed with just enough digits to
// round-trip, so parse(matrix_to_json(m)) == m bit for bit.
std::string matrix_to_json(const Matrix& m);

// Shortest representation that parses back to exactly x.
std::string format_exact(double x);

// Fixed 12 significant digits, for report output.
std::string format_sig12(double x);

std::string bound_report_json(const BoundReport<double>& report);
std::string region_json(const EnclosureRegion<double>& region);

}  // namespace numrange::io
