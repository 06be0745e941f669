#pragma once

#include <capelli/poly.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace capelli {

// Default workload bound for the brute-force factorization search.
inline constexpr std::uint64_t default_oracle_work = 20'000'000;

struct PolyFactorization {
    RingElement content;
    std::vector<std::pair<Polynomial, unsigned>> factors;  // irreducible, primitive, canonical order

    Polynomial value() const;
};

// Exhaustive trial division over all monic polynomials of ascending degree.
// Rejects up front when q^ceil(deg/2) exceeds the remaining budget.
PolyFactorization factor_prime_field(const Polynomial& f, WorkMeter& meter);

// Kronecker's method: evaluate at 0, 1, -1, 2, -2, ..., enumerate divisor
// tuples of the values in a fixed order, interpolate, trial-divide.
PolyFactorization factor_integers(const Polynomial& f, WorkMeter& meter);
PolyFactorization factor_gaussian(const Polynomial& f, WorkMeter& meter);

// Dispatch on the ring of f.
PolyFactorization factor(const Polynomial& f, WorkMeter& meter);

// True iff f is primitive and its factorization is a single factor of
// multiplicity one.  Requires deg(f) >= 1.
bool is_irreducible(const Polynomial& f, WorkMeter& meter);

}  // namespace capelli
