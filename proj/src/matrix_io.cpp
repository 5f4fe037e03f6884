#include "numrange/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <variant>
#include <vector>

#include "json.hpp"

namespace numrange::io {

namespace {

bool finite(const std::complex<double>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

}  // namespace

Matrix parse_matrix_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("matrix json: ") + e.what());
  }
  if (!doc.is_object()) fail("matrix json: top level must be an object");
  if (!doc.contains("dim")) fail("matrix json: missing field 'dim'");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1 ||
      doc["dim"].get<long long>() > 100000) {
    fail("matrix json: field 'dim' must be a positive integer (at most 100000)");
  }
  const auto dim = doc["dim"].get<Eigen::Index>();
  if (!doc.contains("entries")) fail("matrix json: missing field 'entries'");
  const auto& entries = doc["entries"];
  if (!entries.is_array()) fail("matrix json: field 'entries' must be an array");
  if (static_cast<Eigen::Index>(entries.size()) != dim * dim) {
    std::ostringstream msg;
    msg << "matrix json: field 'entries' has " << entries.size()
        << " elements, expected dim*dim = " << dim * dim;
    fail(msg.str());
  }
  Matrix m(dim, dim);
  for (Eigen::Index k = 0; k < dim * dim; ++k) {
    const auto& e = entries[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      std::ostringstream msg;
      msg << "matrix json: entries[" << k << "] must be a [re, im] number pair";
      fail(msg.str());
    }
    std::complex<double> z(e[0].get<double>(), e[1].get<double>());
    if (!finite(z)) {
      std::ostringstream msg;
      msg << "matrix json: entries[" << k << "] is not finite";
      fail(msg.str());
    }
    m(k / dim, k % dim) = z;
  }
  return m;
}

std::complex<double> parse_complex_token(const std::string& token) {
  // Grammar: [real][{+|-}imag]i | real | [{+|-}]i, where each coefficient
  // is a plain floating literal.  Examples: 2-4i, 5i, -1, -i, 3-i.
  const char* begin = token.c_str();
  const char* end = begin + token.size();
  const char* p = begin;
  auto bad = [&]() { fail("complex token '" + token + "' is malformed"); };

  auto read_coeff = [&](double& value) -> bool {
    // Parses [sign]number or bare [sign] before an 'i'; returns false when
    // nothing (not even a sign) was consumed.
    const char* q = p;
    double sign = 1.0;
    if (q < end && (*q == '+' || *q == '-')) {
      sign = (*q == '-') ? -1.0 : 1.0;
      ++q;
    }
    if (q < end && (*q == 'i' || *q == 'I')) {
      if (q == p && p != begin) return false;  // no sign, no digits
      value = sign;
      p = q;
      return true;
    }
    if (q > p && q < end && (*q == '+' || *q == '-')) bad();  // double sign
    char* after = nullptr;
    double v = std::strtod(q, &after);
    if (after == q) {
      if (q == p) return false;
      bad();  // dangling sign
    }
    if (after > end) bad();
    value = sign * v;
    p = after;
    return true;
  };

  if (token.empty()) bad();
  double first = 0.0;
  if (!read_coeff(first)) bad();
  if (p == end) return {first, 0.0};
  if (*p == 'i' || *p == 'I') {
    ++p;
    if (p != end) bad();
    return {0.0, first};
  }
  if (*p != '+' && *p != '-') bad();
  double second = 0.0;
  if (!read_coeff(second)) bad();
  if (p == end || (*p != 'i' && *p != 'I')) bad();
  ++p;
  if (p != end) bad();
  std::complex<double> z(first, second);
  if (!finite(z)) fail("complex token '" + token + "' is not finite");
  return z;
}

Matrix parse_matrix_grid(const std::string& text) {
  std::vector<std::vector<std::complex<double>>> rows;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    std::istringstream words(line);
    std::string tok;
    std::vector<std::complex<double>> row;
    while (words >> tok) {
      if (tok[0] == '#') break;  // comment to end of line
      try {
        row.push_back(parse_complex_token(tok));
      } catch (const ParseError& e) {
        std::ostringstream msg;
        msg << "matrix grid line " << lineno << ": " << e.what();
        fail(msg.str());
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) fail("matrix grid: no entries found");
  const std::size_t dim = rows.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (rows[i].size() != dim) {
      std::ostringstream msg;
      msg << "matrix grid: row " << i + 1 << " has " << rows[i].size()
          << " entries, expected " << dim << " for a square matrix";
      fail(msg.str());
    }
  }
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix parse_matrix(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? parse_matrix_json(text) : parse_matrix_grid(text);
  }
  fail("matrix input is empty");
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail("cannot read input file '" + path + "'");
  return parse_matrix(buf.str());
}

std::string format_exact(double x) {
  if (x == 0.0) {
    // "-0" would be read back as the integer zero, losing the sign
    return std::signbit(x) ? "-0.0" : "0.0";
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string matrix_to_json(const Matrix& m) {
  std::ostringstream out;
  out << "{\"dim\": " << m.rows() << ", \"entries\": [";
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    const auto& z = m(k / m.cols(), k % m.cols());
    if (k) out << ", ";
    out << '[' << format_exact(z.real()) << ", " << format_exact(z.imag()) << ']';
  }
  out << "]}";
  return out.str();
}

std::string bound_report_json(const BoundReport<double>& report) {
  std::ostringstream out;
  out << "{\n"
      << "  \"spectral_norm\": " << format_sig12(report.spectral_norm) << ",\n"
      << "  \"classical\": " << format_sig12(report.classical) << ",\n"
      << "  \"kittaneh_power\": " << format_sig12(report.kittaneh_power) << ",\n"
      << "  \"kittaneh_mean\": " << format_sig12(report.kittaneh_mean) << ",\n"
      << "  \"corollary\": " << format_sig12(report.octagon) << ",\n"
      << "  \"ratios\": {\n"
      << "    \"kittaneh_power\": " << format_sig12(report.ratios.kittaneh_power)
      << ",\n"
      << "    \"kittaneh_mean\": " << format_sig12(report.ratios.kittaneh_mean)
      << ",\n"
      << "    \"corollary\": " << format_sig12(report.ratios.octagon) << "\n"
      << "  }\n"
      << "}";
  return out.str();
}

std::string region_json(const EnclosureRegion<double>& region) {
  std::ostringstream out;
  if (const auto* seg = std::get_if<Segment<double>>(&region)) {
    const auto& e = seg->endpoint;
    out << "{\"kind\": \"segment\", \"endpoint\": [" << format_sig12(e.x())
        << ", " << format_sig12(e.y()) << "], \"vertices\": [["
        << format_sig12(-e.x()) << ", " << format_sig12(-e.y()) << "], ["
        << format_sig12(e.x()) << ", " << format_sig12(e.y()) << "]]}";
    return out.str();
  }
  const auto& poly = std::get<ConvexPolygon<double>>(region);
  out << "{\"kind\": \"" << shape_name(poly.shape) << "\", \"vertices\": [";
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    if (i) out << ", ";
    out << '[' << format_sig12(poly.vertices[i].x()) << ", "
        << format_sig12(poly.vertices[i].y()) << ']';
  }
  out << "]}";
  return out.str();
}

}  // namespace numrange::io
