#pragma once

#include <capelli/nt.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

enum class RingKind { integers, gaussian_integers, prime_field };

struct RingDescriptor {
    RingKind kind = RingKind::integers;
    std::int64_t modulus = 0;  // prime q, prime_field only

    static RingDescriptor integers() { return {RingKind::integers, 0}; }
    static RingDescriptor gaussian() { return {RingKind::gaussian_integers, 0}; }
    static RingDescriptor prime_field(std::int64_t q);  // q must be prime

    std::int64_t characteristic() const { return kind == RingKind::prime_field ? modulus : 0; }
    std::string name() const;  // "Z", "Z[i]", "F_<q>"

    bool operator==(const RingDescriptor&) const = default;
};

// Exact element of Z, Z[i] or F_q. Prime-field residues live in [0, q); the
// imaginary part is only populated for Z[i]. Values are immutable.
class RingElement {
public:
    RingElement() : ring_(RingDescriptor::integers()) {}
    RingElement(const RingDescriptor& ring, Int re, Int im = 0);

    static RingElement zero(const RingDescriptor& ring) { return RingElement(ring, 0); }
    static RingElement one(const RingDescriptor& ring) { return RingElement(ring, 1); }

    const RingDescriptor& ring() const { return ring_; }
    const Int& re() const { return re_; }
    const Int& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_unit() const;

    Int norm() const;  // |x| over Z, re^2 + im^2 over Z[i], the residue over F_q
    RingElement conj() const;
    RingElement pow(std::uint64_t e) const;
    RingElement inverse_unit() const;  // requires is_unit()

    // Exact division, or nullopt when d does not divide *this.
    std::optional<RingElement> divided_by(const RingElement& d) const;

    friend RingElement operator+(const RingElement&, const RingElement&);
    friend RingElement operator-(const RingElement&, const RingElement&);
    friend RingElement operator*(const RingElement&, const RingElement&);
    RingElement operator-() const;
    bool operator==(const RingElement&) const = default;

private:
    RingDescriptor ring_;
    Int re_ = 0, im_ = 0;
};

// Fixed total order used everywhere output must be deterministic:
// norm first, then re, then |im| with the nonnegative representative first.
bool element_less(const RingElement& a, const RingElement& b);

// Splits x into (unit, canonical associate) with x = unit * canonical.
// Conventions: Z takes |x|; Z[i] takes the associate with re > 0 and
// -re < im <= re, which fixes 1+i for the ramified prime; F_q takes 1 for any
// nonzero x. unit_normalize(0) = (1, 0).
std::pair<RingElement, RingElement> unit_normalize(const RingElement& x);
RingElement canonical_associate(const RingElement& x);

// gcd over Z or Z[i] in canonical associate form; element_gcd(0, 0) = 0.
RingElement element_gcd(const RingElement& a, const RingElement& b);

struct PrimeFactorization {
    RingElement unit;
    std::vector<std::pair<RingElement, unsigned>> factors;  // canonical primes, sorted, exponents >= 1
    RingElement value() const;
};

// The full unit group, in the fixed ring order: Z -> [1, -1],
// Z[i] -> [1, -1, i, -i], F_q -> [1, 2, ..., q-1].
std::vector<RingElement> units(const RingDescriptor& ring);

// Factorization into canonical primes. x must be nonzero. Trial division at
// heart; an optional meter lets the caller bound the search.
PrimeFactorization canonical_factor(const RingElement& x, WorkMeter* meter = nullptr);

// A p-th root of x if one exists (p prime). Zero is a p-th power of zero.
// The returned root is deterministic but otherwise unspecified among the
// valid roots.
std::optional<RingElement> is_pth_power(const RingElement& x, std::int64_t p);

// The image of the unit group under u -> u^p, deduplicated and sorted.
std::vector<RingElement> unit_pth_powers(const RingDescriptor& ring, std::int64_t p);

// e(x): 0 when x is a unit, else the gcd of the exponents in canonical_factor(x).
std::uint64_t exponent(const RingElement& x);

// Reduced fraction over Z or Z[i]: gcd(num, den) is a unit, den is a canonical
// associate (so any unit sits in the numerator).
struct Fraction {
    RingElement num, den;

    static Fraction make(const RingElement& num, const RingElement& den);
    bool is_integral() const { return den.is_one(); }
    bool operator==(const Fraction&) const = default;
};

}  // namespace capelli
