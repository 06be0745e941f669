#include <capelli/admissible.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace capelli {

std::string to_string(AdmissibleShape s) {
    switch (s) {
        case AdmissibleShape::odd_only: return "odd-only";
        case AdmissibleShape::odd_and_twice_odd: return "odd-and-twice-odd";
        case AdmissibleShape::all: return "all";
    }
    throw std::logic_error("unreachable");
}

std::uint64_t exponent_pair(const RingElement& a, const RingElement& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("exponent_pair: mixed rings");
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("exponent_pair: zero input");
    return std::gcd(exponent(a), exponent(b));
}

bool is_inadmissible_prime(const RingElement& a, const RingElement& b, std::int64_t p) {
    if (a.ring() != b.ring()) throw std::invalid_argument("is_inadmissible_prime: mixed rings");
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("is_inadmissible_prime: zero input");
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("is_inadmissible_prime: p must be prime");

    const PrimeFactorization fa = canonical_factor(a);
    const PrimeFactorization fb = canonical_factor(b);
    auto exponent_gcd = [](const PrimeFactorization& f) {
        std::uint64_t g = 0;
        for (const auto& [prime, e] : f.factors) g = std::gcd(g, static_cast<std::uint64_t>(e));
        return g;
    };
    const std::uint64_t e = std::gcd(exponent_gcd(fa), exponent_gcd(fb));
    if (e != 0 && e % static_cast<std::uint64_t>(p) != 0) return false;

    // The units here are the ones attached to the canonical prime factorizations;
    // with p | e(a,b) the coset modulo p-th powers does not depend on the choice
    // of prime representatives.
    const RingElement w = fa.unit.inverse_unit() * fb.unit;
    const std::vector<RingElement> powers = unit_pth_powers(a.ring(), p);
    return std::find(powers.begin(), powers.end(), w) != powers.end();
}

AdmissibleSpec admissible_spec(std::uint64_t m, const RingElement& a, const RingElement& b) {
    if (m == 0) throw std::invalid_argument("admissible_spec: m must be positive");
    if (a.ring() != b.ring()) throw std::invalid_argument("admissible_spec: mixed rings");
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("admissible_spec: zero input");

    AdmissibleSpec spec{m, a, b, AdmissibleShape::all, exponent_pair(a, b),
                        a.is_unit() && b.is_unit(), {}, {}};
    const RingElement mb = (m % 2 == 1) ? -b : b;  // (-1)^m b
    if (is_inadmissible_prime(a, mb, 2))
        spec.shape = AdmissibleShape::odd_only;
    else if (is_inadmissible_prime(a, b, 2))
        spec.shape = AdmissibleShape::odd_and_twice_odd;
    if (!spec.units_only) {
        for (std::int64_t p : prime_divisors(static_cast<std::int64_t>(spec.e_pair))) {
            if (!is_inadmissible_prime(a, b, p)) continue;
            spec.inadmissible_primes.push_back(p);
            if (p != 2) spec.excluded_odd.push_back(p);
        }
    }
    return spec;
}

bool membership(std::int64_t n, const AdmissibleSpec& spec) {
    if (n < 2) throw std::invalid_argument("membership: n must be at least 2");
    std::int64_t odd = n;
    int s = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++s;
    }
    switch (spec.shape) {
        case AdmissibleShape::odd_only:
            if (s != 0) return false;
            break;
        case AdmissibleShape::odd_and_twice_odd:
            if (s > 1) return false;
            break;
        case AdmissibleShape::all:
            break;
    }
    for (std::int64_t r : prime_divisors(odd)) {
        // For odd r the sign (-1)^m is itself an r-th power, so the plain
        // (a,b) test is the right one regardless of m.
        if (spec.units_only) {
            if (is_inadmissible_prime(spec.a, spec.b, r)) return false;
        } else if (std::find(spec.excluded_odd.begin(), spec.excluded_odd.end(), r) !=
                   spec.excluded_odd.end()) {
            return false;
        }
    }
    return true;
}

std::vector<std::int64_t> reducible_prime_candidates(std::uint64_t m, const RingElement& a,
                                                     const RingElement& b) {
    if (m == 0) throw std::invalid_argument("reducible_prime_candidates: m must be positive");
    if (a.ring() != b.ring()) throw std::invalid_argument("reducible_prime_candidates: mixed rings");
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("reducible_prime_candidates: zero input");
    if (a.is_unit() && b.is_unit())
        throw std::invalid_argument(
            "reducible_prime_candidates: both coefficients are units, every prime is a candidate");

    const RingElement mb = (m % 2 == 1) ? -b : b;
    std::vector<std::int64_t> out;
    for (std::int64_t p : prime_divisors(static_cast<std::int64_t>(exponent_pair(a, b))))
        if (is_inadmissible_prime(a, mb, p)) out.push_back(p);
    return out;
}

}  // namespace capelli
