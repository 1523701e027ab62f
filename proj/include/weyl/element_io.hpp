#ifndef WEYL_ELEMENT_IO_HPP
#define WEYL_ELEMENT_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "weyl/element.hpp"

namespace weyl {

// Grammar: terms `c * x<i>^a * d<i>^b` joined by + and -, `E` is the Euler
// operator, parentheses group, juxtaposition multiplies. Factors are
// multiplied in the order written, so `d1*x1` parses to x1*d1 + 1.
WeylElement parseElement(std::string_view text, std::size_t n);

/// Comma-separated list of elements.
std::vector<WeylElement> parseElementList(std::string_view text, std::size_t n);

std::string toString(const Monomial& m);
std::string toString(const Rational& q);
std::string toString(const WeylElement& e);

}  // namespace weyl

#endif
