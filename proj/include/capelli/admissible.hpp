#pragma once

#include <capelli/ring.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace capelli {

// Shape of the set of safe inflation exponents n for a fixed (m, a, b):
// odd n only, odd and twice-odd n, or all n of the form 2^s * odd.
enum class AdmissibleShape { odd_only, odd_and_twice_odd, all };

std::string to_string(AdmissibleShape s);

struct AdmissibleSpec {
    std::uint64_t m;
    RingElement a, b;
    AdmissibleShape shape;
    std::uint64_t e_pair;   // e(a, b): gcd of the two exponent invariants, 0 when both are units
    bool units_only;        // a and b are both units; the excluded primes then form
                            // an infinite family and are tested on demand
    std::vector<std::int64_t> inadmissible_primes;  // {p | e(a,b) : p is (a,b)-inadmissible}
    std::vector<std::int64_t> excluded_odd;         // the odd members, the ones membership uses
};

// e(a, b) = gcd(e(a), e(b)) with gcd(0, k) = k; zero iff both inputs are units.
std::uint64_t exponent_pair(const RingElement& a, const RingElement& b);

// p is (a,b)-inadmissible iff p | e(a,b) (with 0 divisible by everything) and
// the factorization units of a and b agree modulo p-th powers of units.
bool is_inadmissible_prime(const RingElement& a, const RingElement& b, std::int64_t p);

AdmissibleSpec admissible_spec(std::uint64_t m, const RingElement& a, const RingElement& b);

// Whether n >= 2 is a safe exponent under the profile: the power of 2 in n
// is gated by the shape, and every odd prime divisor must be admissible.
bool membership(std::int64_t n, const AdmissibleSpec& spec);

// The finitely many primes p for which f(X^p) can be reducible when f is
// irreducible with leading coefficient a and constant term b: the divisors of
// e(a,b) that are (a, (-1)^m b)-inadmissible. Errors when a and b are both
// units (binomial-style inputs need the constructive test instead).
std::vector<std::int64_t> reducible_prime_candidates(std::uint64_t m, const RingElement& a,
                                                     const RingElement& b);

}  // namespace capelli
