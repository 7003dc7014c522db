#ifndef CARLITZ_GRAMMAR_HPP
#define CARLITZ_GRAMMAR_HPP

/* Canonical text and JSON forms for polynomials.
 *
 * Text grammar (whitespace-insensitive):
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := atom ['^' uint]
 *   atom   := uint | 'g' | 'th' | 'z' | 'Z' | 't'<uint> | 'X'<uint> | '(' expr ')'
 * Integers reduce into the prime subfield; 'g' is the canonical generator of
 * F_q (rejected for prime q); '/' divides by a θ-only subexpression.
 *
 * Canonical output lists terms in ascending graded-lex order.  Coefficients
 * in the prime subfield with value > p/2 print as negatives ("1 - z").
 */

#include <string>

#include "carlitz/multipoly.hpp"
#include "carlitz/zseries.hpp"

namespace carlitz {

MultiPoly parse_poly(const Fq& F, const std::string& text);
ThetaPoly parse_theta_poly(const Fq& F, const std::string& text);
Frac parse_frac(const Fq& F, const std::string& text);

std::string format_poly(const MultiPoly& p);
std::string format_frac(const Frac& c);
// truncated series print as c0 + c1*z + ... + O(z^prec)
std::string format_series(const ZSeries& s);

std::string poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const std::string& json_text);

} // namespace carlitz

#endif
