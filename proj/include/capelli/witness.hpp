#pragma once

#include <capelli/poly.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace capelli {

// prime: u*f(X^p) decomposes through the p x p circulant determinant built
// from the p-sections of a degree-m factor P (up to the sign (-1)^(m(p-1))).
// four: the same with p = 2 applied to f(X^2), so P has degree 2m and
// u*f(X^4) = P(X) * P(-X).
enum class WitnessBranch { prime, four };

struct WitnessDecomposition {
    WitnessBranch branch;
    std::int64_t p;  // the circulant size (2 on the four branch)
    RingElement u;
    std::vector<Polynomial> sections;  // S_0 .. S_{p-1}
    Polynomial factor;                 // P
    Polynomial cofactor;               // P*, with P * P* the circulant determinant
};

// Determinant of the p x p circulant with first row c_0, ..., c_{p-1} and each
// later row rotated one step right. p must be prime. Cofactor expansion for
// p <= 5, fraction-free elimination above.
Polynomial circulant_det(const std::vector<Polynomial>& c);

// circulant_det of the entries c_j = X^j * S_j(X^p) with p = sections.size().
Polynomial witness_determinant(const std::vector<Polynomial>& sections);

// The cofactor P* with P * P* = witness_determinant(multisection(P, p));
// the division is exact for every nonzero P. For p = 2 this is P(-X).
Polynomial complementary_factor(const Polynomial& P, std::int64_t p);

// Constructive reducibility witness for f(X^n), or nullopt when f(X^n) is
// irreducible. f must be irreducible with nonzero constant term; the oracle
// verifies that and factors the reduced inflations f(X^t) for t running over
// reduction_exponents(n). The returned decomposition is re-verified
// bit-exactly against its defining identity before being handed back.
std::optional<WitnessDecomposition> extract_witness(const Polynomial& f, std::int64_t n,
                                                    WorkMeter& meter);

// Independent structural check of a claimed witness: branch and section
// shape, u a unit with u*lead(f) a p-th power, the section identity
// P = sum X^j S_j(X^p), the circulant product, and the full identity at n.
// Returns false on any mismatch, throws nothing.
bool verify_witness(const Polynomial& f, std::int64_t n, const WitnessDecomposition& w);

// Characteristic p only: f(X^(p^s)) is reducible iff some unit multiple of f
// has all coefficients inside the subring of p-th powers. Over a prime field
// that is every polynomial, but the scan is performed honestly.
bool char_p_inflation_reducible(const Polynomial& f, std::uint64_t s);

struct CyclotomicRecord {
    std::int64_t n;
    Polynomial phi;
    std::uint64_t euler_phi;
};

// The n-th cyclotomic polynomial over the given ring, by exact recursive
// division of X^n - 1. Requires n >= 1 and characteristic not dividing n.
CyclotomicRecord cyclotomic(const RingDescriptor& ring, std::int64_t n);

// Over F_q with gcd(q, n) = 1 the n-th cyclotomic polynomial splits into
// phi(n)/d irreducible factors, each of degree d = ord_n(q). Returns (d, count).
std::pair<std::uint64_t, std::uint64_t> cyclotomic_factor_count(std::int64_t n, std::int64_t q);

// gcd(m, p - 1) = 1: under this test the cofactor P* of a prime-branch
// witness is itself irreducible.
bool cofactor_coprime_criterion(std::uint64_t m, std::int64_t p);

}  // namespace capelli
