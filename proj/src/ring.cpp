#include <capelli/ring.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace capelli {

namespace {

Int mod_reduce(const Int& x, std::int64_t q) {
    Int m = x % q;
    if (m < 0) m += q;
    return m;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

// Nearest integer to a/b for b > 0, ties rounded up.
Int round_div(const Int& a, const Int& b) { return floor_div(2 * a + b, 2 * b); }

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    // extended Euclid; requires gcd(a, m) = 1, m >= 1
    if (m == 1) return 0;
    std::int64_t r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) throw std::invalid_argument("inverse_mod: arguments not coprime");
    return ((t0 % m) + m) % m;
}

}  // namespace

RingDescriptor RingDescriptor::prime_field(std::int64_t q) {
    if (q < 2 || !is_prime_u64(static_cast<std::uint64_t>(q)))
        throw std::invalid_argument("prime_field: modulus must be prime");
    return {RingKind::prime_field, q};
}

std::string RingDescriptor::name() const {
    switch (kind) {
        case RingKind::integers: return "Z";
        case RingKind::gaussian_integers: return "Z[i]";
        case RingKind::prime_field: return "F_" + std::to_string(modulus);
    }
    return "?";
}

RingElement::RingElement(const RingDescriptor& ring, Int re, Int im)
    : ring_(ring), re_(std::move(re)), im_(std::move(im)) {
    switch (ring_.kind) {
        case RingKind::integers:
            if (im_ != 0) throw std::invalid_argument("integer element with imaginary part");
            break;
        case RingKind::gaussian_integers:
            break;
        case RingKind::prime_field:
            if (im_ != 0) throw std::invalid_argument("prime-field element with imaginary part");
            re_ = mod_reduce(re_, ring_.modulus);
            break;
    }
}

bool RingElement::is_unit() const {
    switch (ring_.kind) {
        case RingKind::integers: return re_ == 1 || re_ == -1;
        case RingKind::gaussian_integers: return norm() == 1;
        case RingKind::prime_field: return re_ != 0;
    }
    return false;
}

Int RingElement::norm() const {
    switch (ring_.kind) {
        case RingKind::integers: return abs(re_);
        case RingKind::gaussian_integers: return re_ * re_ + im_ * im_;
        case RingKind::prime_field: return re_;
    }
    return 0;
}

RingElement RingElement::conj() const {
    if (ring_.kind == RingKind::gaussian_integers) return RingElement(ring_, re_, -im_);
    return *this;
}

RingElement RingElement::pow(std::uint64_t e) const {
    RingElement acc = one(ring_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

RingElement RingElement::inverse_unit() const {
    if (!is_unit()) throw std::domain_error("inverse_unit: not a unit");
    switch (ring_.kind) {
        case RingKind::integers: return *this;
        case RingKind::gaussian_integers: return conj();
        case RingKind::prime_field:
            return RingElement(ring_, Int(inverse_mod(re_.convert_to<std::int64_t>(), ring_.modulus)));
    }
    throw std::logic_error("inverse_unit: bad ring");
}

std::optional<RingElement> RingElement::divided_by(const RingElement& d) const {
    if (ring_ != d.ring()) throw std::invalid_argument("division: ring mismatch");
    if (d.is_zero()) throw std::domain_error("division by zero");
    switch (ring_.kind) {
        case RingKind::integers:
            if (re_ % d.re_ != 0) return std::nullopt;
            return RingElement(ring_, re_ / d.re_);
        case RingKind::gaussian_integers: {
            RingElement num = *this * d.conj();
            Int n = d.norm();
            if (num.re() % n != 0 || num.im() % n != 0) return std::nullopt;
            return RingElement(ring_, num.re() / n, num.im() / n);
        }
        case RingKind::prime_field:
            return *this * d.inverse_unit();
    }
    throw std::logic_error("division: bad ring");
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    if (a.ring_ != b.ring_) throw std::invalid_argument("addition: ring mismatch");
    return RingElement(a.ring_, a.re_ + b.re_, a.im_ + b.im_);
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    if (a.ring_ != b.ring_) throw std::invalid_argument("subtraction: ring mismatch");
    return RingElement(a.ring_, a.re_ - b.re_, a.im_ - b.im_);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    if (a.ring_ != b.ring_) throw std::invalid_argument("multiplication: ring mismatch");
    if (a.ring_.kind == RingKind::gaussian_integers)
        return RingElement(a.ring_, a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    return RingElement(a.ring_, a.re_ * b.re_);
}

RingElement RingElement::operator-() const { return RingElement(ring_, -re_, -im_); }

bool element_less(const RingElement& a, const RingElement& b) {
    Int na = a.norm(), nb = b.norm();
    if (na != nb) return na < nb;
    if (a.re() != b.re()) return a.re() < b.re();
    Int ia = abs(a.im()), ib = abs(b.im());
    if (ia != ib) return ia < ib;
    return a.im() > b.im();  // nonnegative imaginary part first
}

std::pair<RingElement, RingElement> unit_normalize(const RingElement& x) {
    const RingDescriptor& R = x.ring();
    if (x.is_zero()) return {RingElement::one(R), x};
    switch (R.kind) {
        case RingKind::integers:
            if (x.re() < 0) return {RingElement(R, -1), -x};
            return {RingElement::one(R), x};
        case RingKind::prime_field:
            return {x, RingElement::one(R)};
        case RingKind::gaussian_integers: {
            RingElement c = x;
            const RingElement i(R, 0, 1);
            int k = 0;
            while (!(c.re() > 0 && c.im() > -c.re() && c.im() <= c.re())) {
                c = c * i;
                if (++k >= 4) throw std::logic_error("unit_normalize: no canonical associate found");
            }
            RingElement u = RingElement::one(R);
            for (int j = 0; j < (4 - k) % 4; ++j) u = u * i;
            return {u, c};
        }
    }
    throw std::logic_error("unit_normalize: bad ring");
}

RingElement canonical_associate(const RingElement& x) { return unit_normalize(x).second; }

RingElement element_gcd(const RingElement& a, const RingElement& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("gcd: ring mismatch");
    const RingDescriptor& R = a.ring();
    switch (R.kind) {
        case RingKind::integers:
            return RingElement(R, abs(gcd(a.re(), b.re())));
        case RingKind::gaussian_integers: {
            RingElement x = a, y = b;
            while (!y.is_zero()) {
                Int n = y.norm();
                RingElement num = x * y.conj();
                RingElement q(R, round_div(num.re(), n), round_div(num.im(), n));
                RingElement r = x - q * y;
                x = y;
                y = r;
            }
            return canonical_associate(x);
        }
        case RingKind::prime_field:
            throw std::invalid_argument("gcd: not defined over a prime field");
    }
    throw std::logic_error("gcd: bad ring");
}

RingElement PrimeFactorization::value() const {
    RingElement acc = unit;
    for (const auto& [p, e] : factors) acc = acc * p.pow(e);
    return acc;
}

std::vector<RingElement> units(const RingDescriptor& R) {
    switch (R.kind) {
        case RingKind::integers:
            return {RingElement::one(R), RingElement(R, -1)};
        case RingKind::gaussian_integers:
            return {RingElement::one(R), RingElement(R, -1), RingElement(R, 0, 1), RingElement(R, 0, -1)};
        case RingKind::prime_field: {
            std::vector<RingElement> out;
            out.reserve(static_cast<std::size_t>(R.modulus - 1));
            for (std::int64_t k = 1; k < R.modulus; ++k) out.emplace_back(R, Int(k));
            return out;
        }
    }
    throw std::logic_error("units: bad ring");
}

namespace {

std::vector<std::pair<Int, int>> factor_positive(const Int& v, WorkMeter* meter) {
    if (meter) return factor_value(v, *meter);
    WorkMeter unmetered(std::numeric_limits<std::uint64_t>::max());
    return factor_value(v, unmetered);
}

}  // namespace

PrimeFactorization canonical_factor(const RingElement& x, WorkMeter* meter) {
    if (x.is_zero()) throw std::domain_error("canonical_factor: zero has no factorization");
    const RingDescriptor& R = x.ring();
    PrimeFactorization out{RingElement::one(R), {}};
    switch (R.kind) {
        case RingKind::prime_field:
            out.unit = x;
            return out;
        case RingKind::integers: {
            auto [u, c] = unit_normalize(x);
            out.unit = u;
            for (auto& [p, e] : factor_positive(c.re(), meter))
                out.factors.push_back({RingElement(R, p), static_cast<unsigned>(e)});
            return out;
        }
        case RingKind::gaussian_integers: {
            RingElement y = x;
            for (auto& [pv, ev] : factor_positive(x.norm(), meter)) {
                const Int& p = pv;
                const unsigned e = static_cast<unsigned>(ev);
                if (p == 2) {
                    // ramified: every factor of 2 in the norm is one copy of 1+i
                    RingElement pi(R, 1, 1);
                    for (unsigned k = 0; k < e; ++k) {
                        auto q = y.divided_by(pi);
                        if (!q) throw std::logic_error("canonical_factor: ramified division failed");
                        y = *q;
                    }
                    out.factors.push_back({pi, e});
                } else if (p % 4 == 3) {
                    // inert: the norm carries p in even powers
                    if (e % 2 != 0) throw std::logic_error("canonical_factor: odd inert exponent");
                    RingElement pi(R, p);
                    for (unsigned k = 0; k < e / 2; ++k) {
                        auto q = y.divided_by(pi);
                        if (!q) throw std::logic_error("canonical_factor: inert division failed");
                        y = *q;
                    }
                    out.factors.push_back({pi, e / 2});
                } else {
                    // split: find p = a^2 + b^2 and separate the conjugate primes
                    Int a = 1, b = 0;
                    for (;; ++a) {
                        if (meter) meter->charge();
                        Int bb = p - a * a;
                        if (bb < a * a) throw std::logic_error("canonical_factor: two-squares search failed");
                        Int r = sqrt(bb);
                        if (r * r == bb) {
                            b = r;
                            break;
                        }
                    }
                    RingElement pi = canonical_associate(RingElement(R, a, b));
                    RingElement pibar = canonical_associate(RingElement(R, a, -b));
                    unsigned k1 = 0;
                    while (k1 < e) {
                        auto q = y.divided_by(pi);
                        if (!q) break;
                        y = *q;
                        ++k1;
                    }
                    for (unsigned k = 0; k + k1 < e; ++k) {
                        auto q = y.divided_by(pibar);
                        if (!q) throw std::logic_error("canonical_factor: split division failed");
                        y = *q;
                    }
                    if (k1 > 0) out.factors.push_back({pi, k1});
                    if (e - k1 > 0) out.factors.push_back({pibar, e - k1});
                }
            }
            if (!y.is_unit()) throw std::logic_error("canonical_factor: nonunit residue");
            out.unit = y;
            std::sort(out.factors.begin(), out.factors.end(),
                      [](const auto& l, const auto& r) { return element_less(l.first, r.first); });
            return out;
        }
    }
    throw std::logic_error("canonical_factor: bad ring");
}

std::optional<RingElement> is_pth_power(const RingElement& x, std::int64_t p) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("is_pth_power: p must be prime");
    const RingDescriptor& R = x.ring();
    if (x.is_zero()) return x;
    switch (R.kind) {
        case RingKind::integers: {
            if (x.re() < 0 && p == 2) return std::nullopt;
            auto r = integer_kth_root(abs(x.re()), static_cast<std::uint64_t>(p));
            if (!r) return std::nullopt;
            return RingElement(R, x.re() < 0 ? Int(-*r) : *r);
        }
        case RingKind::gaussian_integers: {
            auto fac = canonical_factor(x);
            RingElement cand = RingElement::one(R);
            for (auto& [prime, e] : fac.factors) {
                if (e % p != 0) return std::nullopt;
                cand = cand * prime.pow(e / static_cast<unsigned>(p));
            }
            for (const RingElement& w : units(R))
                if (w.pow(static_cast<std::uint64_t>(p)) == fac.unit) return w * cand;
            return std::nullopt;
        }
        case RingKind::prime_field: {
            const std::int64_t q = R.modulus;
            if (q == 2) return x;  // Frobenius on F_2 fixes everything
            const std::int64_t g = std::gcd(p, q - 1);
            if (powm(x.re(), Int((q - 1) / g), Int(q)) != 1) return std::nullopt;
            if (g == 1) {
                std::int64_t pinv = inverse_mod(p % (q - 1), q - 1);
                return x.pow(static_cast<std::uint64_t>(pinv));
            }
            for (std::int64_t r = 1; r < q; ++r) {
                RingElement cand(R, Int(r));
                if (cand.pow(static_cast<std::uint64_t>(p)) == x) return cand;
            }
            return std::nullopt;
        }
    }
    throw std::logic_error("is_pth_power: bad ring");
}

std::vector<RingElement> unit_pth_powers(const RingDescriptor& R, std::int64_t p) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("unit_pth_powers: p must be prime");
    std::vector<RingElement> us = units(R);
    for (RingElement& u : us) u = u.pow(static_cast<std::uint64_t>(p));
    std::sort(us.begin(), us.end(), element_less);
    us.erase(std::unique(us.begin(), us.end()), us.end());
    return us;
}

std::uint64_t exponent(const RingElement& x) {
    if (x.is_zero()) throw std::domain_error("exponent: zero");
    auto fac = canonical_factor(x);
    std::uint64_t g = 0;
    for (auto& [p, e] : fac.factors) g = std::gcd(g, static_cast<std::uint64_t>(e));
    return g;
}

Fraction Fraction::make(const RingElement& num, const RingElement& den) {
    if (num.ring() != den.ring()) throw std::invalid_argument("fraction: ring mismatch");
    if (num.ring().kind == RingKind::prime_field)
        throw std::invalid_argument("fraction: only defined over Z and Z[i]");
    if (den.is_zero()) throw std::domain_error("fraction: zero denominator");
    if (num.is_zero()) return {num, RingElement::one(num.ring())};
    RingElement g = element_gcd(num, den);
    RingElement n = *num.divided_by(g);
    RingElement d = *den.divided_by(g);
    auto [u, c] = unit_normalize(d);
    return {n * u.inverse_unit(), c};
}

}  // namespace capelli
