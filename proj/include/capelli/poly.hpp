#pragma once

#include <capelli/ring.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace capelli {

// Dense univariate polynomial over Z, Z[i], or F_q.  Coefficients are stored
// in ascending powers with no trailing zeros; the zero polynomial has an
// empty coefficient vector.
class Polynomial {
public:
    explicit Polynomial(const RingDescriptor& ring) : ring_(ring) {}
    Polynomial(const RingDescriptor& ring, std::vector<RingElement> coeffs);

    static Polynomial constant(const RingElement& c);
    static Polynomial monomial(const RingElement& c, std::size_t k);
    static Polynomial from_ints(const RingDescriptor& ring, const std::vector<std::int64_t>& ascending);

    const RingDescriptor& ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const;  // throws on the zero polynomial
    const RingElement& leading() const;
    RingElement coeff(std::size_t k) const;
    RingElement constant_term() const { return coeff(0); }
    const std::vector<RingElement>& coefficients() const { return coeffs_; }

    Polynomial scaled(const RingElement& c) const;
    Polynomial shifted(std::size_t k) const;  // multiply by X^k
    RingElement evaluate(const RingElement& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial&) const = default;

private:
    RingDescriptor ring_;
    std::vector<RingElement> coeffs_;
};

// Total order: degree first (zero polynomial least), then coefficients from
// the constant term up under the element order.
bool poly_less(const Polynomial& a, const Polynomial& b);

// f = content(f) * primitive_part(f); the primitive part has coprime
// coefficients and canonical leading coefficient (monic over F_q).
RingElement content(const Polynomial& f);
Polynomial primitive_part(const Polynomial& f);

Polynomial derivative(const Polynomial& f);
Polynomial inflate(const Polynomial& f, std::size_t n);              // f(X^n)
std::optional<Polynomial> deflate(const Polynomial& f, std::size_t n);
Polynomial reciprocal(const Polynomial& f);                          // X^deg * f(1/X)
Polynomial scale_argument(const Polynomial& f, const RingElement& c);  // f(cX)

// Exact quotient in R[X], or nullopt when g does not divide f.
std::optional<Polynomial> try_divide_exact(const Polynomial& f, const Polynomial& g);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Determinants of square matrices with polynomial entries.  det_expansion is
// cofactor expansion (small matrices, cross-checks); det_bareiss is
// fraction-free elimination with row pivoting.
Polynomial det_expansion(const PolyMatrix& m);
Polynomial det_bareiss(PolyMatrix m);

RingElement resultant(const Polynomial& f, const Polynomial& g);

// Sections of f by residue of the exponent mod p: f(X) = sum_j X^j S_j(X^p).
std::vector<Polynomial> multisection(const Polynomial& f, std::size_t p);

// prod over roots b of `vanishing` of g(X*b), times lc(vanishing)^deg(g);
// computed as a resultant so no root extraction is needed.
Polynomial product_over_roots(const Polynomial& vanishing, const Polynomial& g);

}  // namespace capelli
