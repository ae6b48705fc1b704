#pragma once

// Text formats shared by the CLI and tests.
//
// Sequence file: one term per line; blank lines and '#' comments are skipped.
// Matrix file:   first line "N", then N rows of N whitespace-separated terms.
// A term is either an exponent t (meaning e^t, an optional "e^" prefix is
// accepted) or a positive decimal value, depending on the representation.
// Numbers print with 12 significant digits; integers print without a point.

#include <iosfwd>
#include <string>
#include <string_view>

#include "geoarith/convergence.hpp"
#include "geoarith/geo_field.hpp"
#include "geoarith/seq_transforms.hpp"

namespace geoarith {

enum class Repr { exponent, value };

/// 12 significant digits, "%.12g" style, with -0 printed as 0.
std::string format_number(double x);

/// Bare term as it appears in sequence and matrix files.
std::string format_term(GReal x, Repr repr);

/// "e^t".
std::string format_greal(GReal x);

/// Throws ParseError carrying `line` on malformed or out-of-field input.
GReal parse_term(std::string_view token, Repr repr, std::size_t line = 0);

GSeq parse_gseq(std::istream& in, Repr repr);
GSeq parse_gseq(std::string_view text, Repr repr);
void write_gseq(std::ostream& out, const GSeq& f, Repr repr);

DivisorMatrix parse_matrix(std::istream& in, Repr repr);
void write_matrix(std::ostream& out, const DivisorMatrix& a, Repr repr);

/// "space=AC verdict=consistent witness=2 residual=e^0 N=12 mode=exact"
std::string format_report(const MembershipReport& report);

/// "chain=2,4,8 N=3 cauchy=true limit=e^2"
std::string format_report(const ChainReport& report);

}  // namespace geoarith
