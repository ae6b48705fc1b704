#include "geoarith/text_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "geoarith/errors.hpp"

namespace geoarith {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Content of a line with any '#' comment removed.
std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return trim(line);
}

double parse_number(std::string_view token, std::size_t line) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double x = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(line, "malformed number '" + std::string(token) + "'");
  }
  if (!std::isfinite(x)) throw ParseError(line, "non-finite number '" + std::string(token) + "'");
  return x;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_term(GReal x, Repr repr) {
  return format_number(repr == Repr::exponent ? x.exponent() : x.value());
}

std::string format_greal(GReal x) { return "e^" + format_number(x.exponent()); }

GReal parse_term(std::string_view token, Repr repr, std::size_t line) {
  token = trim(token);
  if (repr == Repr::exponent) {
    if (token.starts_with("e^")) token.remove_prefix(2);
    return GReal::from_exponent(parse_number(token, line));
  }
  const double v = parse_number(token, line);
  if (v <= 0.0) {
    throw ParseError(line, "value " + std::string(token) + " is not a positive real");
  }
  // ln of a tiny denormal is still finite; from_value cannot fail past here.
  return GReal::from_value(v);
}

GSeq parse_gseq(std::istream& in, Repr repr) {
  std::vector<GReal> terms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto content = strip_comment(line);
    if (content.empty()) continue;
    if (split_ws(content).size() != 1) {
      throw ParseError(lineno, "expected one term per line");
    }
    terms.push_back(parse_term(content, repr, lineno));
  }
  if (terms.empty()) throw ParseError(0, "empty sequence input");
  return GSeq(std::move(terms));
}

GSeq parse_gseq(std::string_view text, Repr repr) {
  std::istringstream in{std::string(text)};
  return parse_gseq(in, repr);
}

void write_gseq(std::ostream& out, const GSeq& f, Repr repr) {
  for (GReal x : f.terms()) out << format_term(x, repr) << '\n';
}

DivisorMatrix parse_matrix(std::istream& in, Repr repr) {
  std::string line;
  std::size_t lineno = 0;
  Index size = 0;
  std::vector<GReal> entries;
  while (std::getline(in, line)) {
    ++lineno;
    const auto content = strip_comment(line);
    if (content.empty()) continue;
    const auto tokens = split_ws(content);
    if (size == 0) {
      const double n = parse_number(content, lineno);
      if (tokens.size() != 1 || n < 1 || n != std::floor(n) ||
          n > static_cast<double>(kMatrixSizeCap)) {
        throw ParseError(lineno, "matrix header must be a size in 1.." +
                                     std::to_string(kMatrixSizeCap));
      }
      size = static_cast<Index>(n);
      entries.reserve(size * size);
      continue;
    }
    if (tokens.size() != size) {
      throw ParseError(lineno, "expected " + std::to_string(size) + " entries, found " +
                                   std::to_string(tokens.size()));
    }
    if (entries.size() == size * size) throw ParseError(lineno, "too many matrix rows");
    for (auto token : tokens) entries.push_back(parse_term(token, repr, lineno));
  }
  if (size == 0) throw ParseError(0, "empty matrix input");
  if (entries.size() != size * size) {
    throw ParseError(lineno, "expected " + std::to_string(size) + " matrix rows");
  }
  return DivisorMatrix(size, std::move(entries));
}

void write_matrix(std::ostream& out, const DivisorMatrix& a, Repr repr) {
  out << a.size() << '\n';
  for (Index i = 1; i <= a.size(); ++i) {
    for (Index j = 1; j <= a.size(); ++j) {
      if (j > 1) out << ' ';
      out << format_term(a.entry(i, j), repr);
    }
    out << '\n';
  }
}

std::string format_report(const MembershipReport& report) {
  std::string s = "space=";
  s += to_string(report.space);
  s += " verdict=";
  s += to_string(report.verdict);
  s += " witness=";
  s += report.witness ? std::to_string(*report.witness) : "-";
  s += " residual=" + format_greal(report.max_residual);
  s += " N=" + std::to_string(report.prefix_length);
  s += " mode=";
  s += to_string(report.mode);
  if (report.epsilon) s += " epsilon=" + format_greal(*report.epsilon);
  return s;
}

std::string format_report(const ChainReport& report) {
  std::string s = "chain=";
  for (std::size_t k = 0; k < report.chain.size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(report.chain[k]);
  }
  s += " N=" + std::to_string(report.extracted.size());
  s += report.is_cauchy ? " cauchy=true" : " cauchy=false";
  s += " limit=" + (report.limit ? format_greal(*report.limit) : std::string("-"));
  return s;
}

}  // namespace geoarith
