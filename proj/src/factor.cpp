#include <capelli/factor.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace capelli {

Polynomial PolyFactorization::value() const {
    Polynomial acc = Polynomial::constant(content);
    for (const auto& [g, e] : factors)
        for (unsigned k = 0; k < e; ++k) acc = acc * g;
    return acc;
}

namespace {

// Evaluation schedule 0, 1, -1, 2, -2, ...
RingElement schedule_point(const RingDescriptor& R, std::size_t idx) {
    if (idx == 0) return RingElement::zero(R);
    std::int64_t k = static_cast<std::int64_t>((idx + 1) / 2);
    return RingElement(R, Int(idx % 2 == 1 ? k : -k));
}

// All divisors of v up to associates, canonical representatives, sorted.
std::vector<RingElement> canonical_divisors(const RingElement& v, WorkMeter& meter) {
    PrimeFactorization pf = canonical_factor(v, &meter);
    std::vector<RingElement> out{RingElement::one(v.ring())};
    for (const auto& [p, e] : pf.factors) {
        std::vector<RingElement> next;
        next.reserve(out.size() * (e + 1));
        for (const RingElement& d : out) {
            RingElement acc = d;
            next.push_back(acc);
            for (unsigned k = 1; k <= e; ++k) {
                acc = acc * p;
                next.push_back(acc);
            }
        }
        out = std::move(next);
        meter.charge(out.size());
    }
    for (RingElement& d : out) d = canonical_associate(d);
    std::sort(out.begin(), out.end(), element_less);
    return out;
}

// Add one interpolation constraint to the Newton divided-difference chain;
// nullopt when the new difference is not a ring element (candidate cannot
// extend to a polynomial over the ring).
std::optional<RingElement> next_difference(const std::vector<RingElement>& cs,
                                           const std::vector<RingElement>& xs,
                                           const RingElement& x_new, const RingElement& y_new) {
    RingElement u = y_new;
    for (std::size_t j = 0; j < cs.size(); ++j) {
        auto q = (u - cs[j]).divided_by(x_new - xs[j]);
        if (!q) return std::nullopt;
        u = *q;
    }
    return u;
}

Polynomial newton_poly(const std::vector<RingElement>& cs, const std::vector<RingElement>& xs) {
    const RingDescriptor& R = cs.front().ring();
    Polynomial acc(R);
    Polynomial basis = Polynomial::constant(RingElement::one(R));
    const Polynomial x = Polynomial::monomial(RingElement::one(R), 1);
    for (std::size_t j = 0; j < cs.size(); ++j) {
        acc = acc + basis.scaled(cs[j]);
        basis = basis * (x - Polynomial::constant(xs[j]));
    }
    return acc;
}

// Search for a degree-d divisor of h via divisor-tuple interpolation over the
// points xs with nonzero values vals (xs.size() > d+1 gives spare points used
// as divisibility prechecks).  Returns the first hit in the fixed order.
std::optional<Polynomial> degree_search(const Polynomial& h, std::size_t d,
                                        const std::vector<RingElement>& xs,
                                        const std::vector<RingElement>& vals, WorkMeter& meter) {
    const RingDescriptor& R = h.ring();
    std::vector<std::vector<RingElement>> lists(d + 1);
    const std::vector<RingElement> us = units(R);
    for (std::size_t i = 0; i <= d; ++i) {
        std::vector<RingElement> divs = canonical_divisors(vals[i], meter);
        if (i == 0) {
            // associates of a divisor give associate candidates, so one
            // representative per class suffices at the first position
            lists[i] = std::move(divs);
        } else {
            lists[i].reserve(divs.size() * us.size());
            for (const RingElement& dv : divs)
                for (const RingElement& u : us) lists[i].push_back(dv * u);
        }
    }
    std::vector<RingElement> cs;
    cs.reserve(d + 1);
    auto dfs = [&](auto&& self, std::size_t level) -> std::optional<Polynomial> {
        if (level == d + 1) {
            if (cs.back().is_zero()) return std::nullopt;  // degree < d: already covered
            Polynomial g = newton_poly(cs, xs);
            if (!h.leading().divided_by(g.leading())) return std::nullopt;
            for (std::size_t e = d + 1; e < xs.size(); ++e) {
                RingElement ge = g.evaluate(xs[e]);
                if (ge.is_zero() || !vals[e].divided_by(ge)) return std::nullopt;
            }
            meter.charge(h.degree());
            if (try_divide_exact(h, g)) return g;
            return std::nullopt;
        }
        for (const RingElement& y : lists[level]) {
            meter.charge();
            std::optional<RingElement> c =
                level == 0 ? std::optional<RingElement>(y) : next_difference(cs, xs, xs[level], y);
            if (!c) continue;
            cs.push_back(*c);
            if (auto r = self(self, level + 1)) return r;
            cs.pop_back();
        }
        return std::nullopt;
    };
    return dfs(dfs, 0);
}

// Kronecker factorization over Z or Z[i].
PolyFactorization factor_ring(const Polynomial& f, WorkMeter& meter) {
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    const RingDescriptor& R = f.ring();
    PolyFactorization out{content(f), {}};
    Polynomial h = primitive_part(f);
    std::vector<Polynomial> found;
    const Polynomial x = Polynomial::monomial(RingElement::one(R), 1);

    while (!h.is_zero() && h.degree() >= 1) {
        if (h.degree() == 1) {
            found.push_back(h);
            break;
        }
        // Collect interpolation points with nonzero values, peeling off root
        // factors as they surface.
        const std::size_t need = h.degree() / 2 + 3;
        std::vector<RingElement> xs, vals;
        std::size_t idx = 0;
        bool peeled = false;
        while (xs.size() < need) {
            RingElement pt = schedule_point(R, idx++);
            meter.charge();
            RingElement v = h.evaluate(pt);
            if (v.is_zero()) {
                Polynomial lin = x - Polynomial::constant(pt);
                found.push_back(lin);
                Polynomial q = *try_divide_exact(h, lin);
                out.content = out.content * content(q);
                h = primitive_part(q);
                peeled = true;
                break;
            }
            xs.push_back(std::move(pt));
            vals.push_back(std::move(v));
        }
        if (peeled) continue;

        bool split = false;
        for (std::size_t d = 1; 2 * d <= h.degree(); ++d) {
            if (auto g = degree_search(h, d, xs, vals, meter)) {
                Polynomial gc = primitive_part(*g);
                found.push_back(gc);
                Polynomial q = *try_divide_exact(h, gc);
                out.content = out.content * content(q);
                h = primitive_part(q);
                split = true;
                break;
            }
        }
        if (!split) {
            found.push_back(h);
            break;
        }
    }

    std::map<Polynomial, unsigned, decltype(&poly_less)> merged(&poly_less);
    for (const Polynomial& g : found) ++merged[g];
    out.factors.assign(merged.begin(), merged.end());
    if (!(out.value() == f)) throw std::logic_error("factor: product check failed");
    return out;
}

}  // namespace

PolyFactorization factor_integers(const Polynomial& f, WorkMeter& meter) {
    if (f.ring().kind != RingKind::integers) throw std::invalid_argument("factor_integers: wrong ring");
    return factor_ring(f, meter);
}

PolyFactorization factor_gaussian(const Polynomial& f, WorkMeter& meter) {
    if (f.ring().kind != RingKind::gaussian_integers)
        throw std::invalid_argument("factor_gaussian: wrong ring");
    return factor_ring(f, meter);
}

PolyFactorization factor_prime_field(const Polynomial& f, WorkMeter& meter) {
    if (f.ring().kind != RingKind::prime_field)
        throw std::invalid_argument("factor_prime_field: wrong ring");
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    const RingDescriptor& R = f.ring();
    PolyFactorization out{content(f), {}};
    Polynomial h = primitive_part(f);
    std::vector<Polynomial> found;

    if (!h.is_zero() && h.degree() >= 1) {
        // Up-front workload guard: the candidate space is about q^ceil(deg/2).
        Int space = 1;
        for (std::size_t k = 0; k < (h.degree() + 1) / 2; ++k) space *= R.modulus;
        if (space > Int(meter.limit - meter.used)) throw BudgetExceeded("oracle budget exceeded");

        for (std::size_t d = 1; 2 * d <= h.degree(); ++d) {
            // Odometer over the d low coefficients of a monic candidate.
            std::vector<std::int64_t> digits(d, 0);
            for (;;) {
                meter.charge();
                std::vector<RingElement> cands;
                cands.reserve(d + 1);
                for (std::int64_t dig : digits) cands.emplace_back(R, Int(dig));
                cands.push_back(RingElement::one(R));
                Polynomial g(R, std::move(cands));
                while (auto q = try_divide_exact(h, g)) {
                    found.push_back(g);
                    h = *q;
                }
                if (2 * d > h.degree()) break;
                // advance the odometer
                std::size_t pos = 0;
                while (pos < d && ++digits[pos] == R.modulus) digits[pos++] = 0;
                if (pos == d) break;
            }
            if (h.degree() < 1 || 2 * d > h.degree()) break;
        }
        if (!h.is_zero() && h.degree() >= 1) found.push_back(h);
    }

    std::map<Polynomial, unsigned, decltype(&poly_less)> merged(&poly_less);
    for (const Polynomial& g : found) ++merged[g];
    out.factors.assign(merged.begin(), merged.end());
    if (!(out.value() == f)) throw std::logic_error("factor: product check failed");
    return out;
}

PolyFactorization factor(const Polynomial& f, WorkMeter& meter) {
    switch (f.ring().kind) {
        case RingKind::integers: return factor_integers(f, meter);
        case RingKind::gaussian_integers: return factor_gaussian(f, meter);
        case RingKind::prime_field: return factor_prime_field(f, meter);
    }
    throw std::logic_error("factor: bad ring");
}

bool is_irreducible(const Polynomial& f, WorkMeter& meter) {
    if (f.is_zero() || f.degree() < 1) throw std::domain_error("is_irreducible: constant input");
    PolyFactorization pf = factor(f, meter);
    return pf.content.is_unit() && pf.factors.size() == 1 && pf.factors[0].second == 1;
}

}  // namespace capelli
