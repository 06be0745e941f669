#pragma once

#include <capelli/poly.hpp>
#include <capelli/ring.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace capelli {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)), pos_(position) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Element grammar: optionally signed decimal; Gaussian integers also accept
// `i`, `b*i` (or `bi`), `a+b*i`, and parenthesized sums.  Whitespace is
// insignificant.  Field elements reduce mod q.
RingElement parse_element(const RingDescriptor& ring, const std::string& text);

// Polynomial grammar: terms `c`, `x`, `c*x^k` joined by + and -, with
// case-insensitive variable and implicit multiplication allowed; coefficients
// follow the element grammar, parenthesized when composite.
Polynomial parse_poly(const RingDescriptor& ring, const std::string& text);

// Canonical rendering; parse(to_string(v)) == v.
std::string to_string(const RingElement& x);
std::string to_string(const Polynomial& f);

}  // namespace capelli
