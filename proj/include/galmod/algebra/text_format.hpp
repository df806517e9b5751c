#pragma once

#include <string>
#include <string_view>

#include "galmod/algebra/ratfn.hpp"

namespace galmod {

// Text form of elements of F_q(t):
//
//   ratfn   := sum [ '/' sum ]
//   sum     := [ '+' | '-' ] term { ( '+' | '-' ) term }
//   term    := factor { '*' factor }
//   factor  := primary [ '^' integer ]
//   primary := integer | 't' | 'g' | '(' sum ')'
//
// Integers are read mod p, `g` is the generator of F_q, `t` the variable.
// The fraction bar appears at most once, outside all parentheses.
// RatFn::to_string() produces this form.

RatFn parse_ratfn(std::string_view text, const ExtField& field);
Poly parse_poly(std::string_view text, const ExtField& field);
ExtFieldElement parse_field_element(std::string_view text, const ExtField& field);

}  // namespace galmod
