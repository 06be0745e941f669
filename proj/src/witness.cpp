#include <capelli/witness.hpp>

#include <capelli/criteria.hpp>
#include <capelli/factor.hpp>

#include <numeric>
#include <stdexcept>
#include <utility>

namespace capelli {

Polynomial circulant_det(const std::vector<Polynomial>& c) {
    const std::size_t p = c.size();
    if (p < 2 || !is_prime_u64(p)) throw std::invalid_argument("circulant_det: size must be prime");
    const RingDescriptor ring = c[0].ring();
    for (const Polynomial& e : c)
        if (e.ring() != ring) throw std::invalid_argument("circulant_det: mixed rings");
    PolyMatrix mat(p, std::vector<Polynomial>(p, Polynomial(ring)));
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t col = 0; col < p; ++col) mat[r][col] = c[(col + p - r) % p];
    return p <= 5 ? det_expansion(mat) : det_bareiss(std::move(mat));
}

Polynomial witness_determinant(const std::vector<Polynomial>& sections) {
    const std::size_t p = sections.size();
    std::vector<Polynomial> entries;
    entries.reserve(p);
    for (std::size_t j = 0; j < p; ++j) entries.push_back(inflate(sections[j], p).shifted(j));
    return circulant_det(entries);
}

Polynomial complementary_factor(const Polynomial& P, std::int64_t p) {
    if (P.is_zero()) throw std::invalid_argument("complementary_factor: zero polynomial");
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("complementary_factor: p must be prime");
    const Polynomial det = witness_determinant(multisection(P, static_cast<std::size_t>(p)));
    auto q = try_divide_exact(det, P);
    // P always divides its own circulant determinant: the determinant is the
    // product of P(wX) over the p-th roots of unity w, and w = 1 contributes P.
    if (!q) throw std::logic_error("complementary_factor: inexact division");
    return *q;
}

std::optional<WitnessDecomposition> extract_witness(const Polynomial& f, std::int64_t n,
                                                    WorkMeter& meter) {
    if (f.is_zero() || f.degree() == 0)
        throw std::domain_error("witness: f must have positive degree");
    if (f.coeff(0).is_zero()) throw std::domain_error("witness: constant term must be nonzero");
    if (n < 2) throw std::invalid_argument("witness: n must be at least 2");
    if (!is_irreducible(f, meter)) throw std::domain_error("witness: f must be irreducible");

    const std::uint64_t m = f.degree();
    const RingElement a = f.leading();
    for (std::int64_t t : reduction_exponents(n)) {
        const bool four = (t == 4);
        const std::int64_t p = four ? 2 : t;
        PolyFactorization pf = factor(inflate(f, static_cast<std::size_t>(t)), meter);
        if (pf.factors.size() == 1 && pf.factors[0].second == 1) continue;

        // Any irreducible factor of the reduced inflation has degree at least
        // deg f(X^t) / t; one of exactly that degree always exists, and the
        // factor list is sorted, so the first hit is the canonical choice.
        const std::size_t target = static_cast<std::size_t>(four ? 2 * m : m);
        const Polynomial* chosen = nullptr;
        for (const auto& [g, mult] : pf.factors)
            if (g.degree() == target) {
                chosen = &g;
                break;
            }
        if (!chosen) throw std::logic_error("witness: no factor of the expected degree");

        const Polynomial& P = *chosen;
        auto u = P.leading().pow(static_cast<std::uint64_t>(p)).divided_by(a);
        if (!u || !u->is_unit()) throw std::logic_error("witness: leading coefficient mismatch");
        WitnessDecomposition w{four ? WitnessBranch::four : WitnessBranch::prime,
                               p,
                               *u,
                               multisection(P, static_cast<std::size_t>(p)),
                               P,
                               complementary_factor(P, p)};
        if (!verify_witness(f, t, w))
            throw std::logic_error("witness: decomposition failed its defining identity");
        return w;
    }
    return std::nullopt;
}

bool verify_witness(const Polynomial& f, std::int64_t n, const WitnessDecomposition& w) {
    if (f.is_zero() || f.degree() == 0 || f.coeff(0).is_zero()) return false;
    if (n < 2) return false;
    if (w.p < 2 || !is_prime_u64(static_cast<std::uint64_t>(w.p))) return false;
    if (w.branch == WitnessBranch::four && w.p != 2) return false;
    const std::size_t p = static_cast<std::size_t>(w.p);
    if (w.sections.size() != p) return false;
    const std::int64_t t = (w.branch == WitnessBranch::four) ? 4 : w.p;
    if (n % t != 0) return false;
    if (w.u.ring() != f.ring() || !w.u.is_unit()) return false;
    if (w.factor.ring() != f.ring() || w.cofactor.ring() != f.ring()) return false;
    for (const Polynomial& s : w.sections)
        if (s.ring() != f.ring()) return false;
    if (w.factor.is_zero() || w.cofactor.is_zero()) return false;

    const std::uint64_t m = f.degree();
    const std::uint64_t i = (w.branch == WitnessBranch::four) ? 2 : 1;
    if (w.factor.degree() != i * m) return false;
    if (w.cofactor.degree() != i * m * (p - 1)) return false;
    if (!is_pth_power(w.u * f.leading(), w.p)) return false;

    // Section identity: P = sum_j X^j S_j(X^p).
    Polynomial rebuilt(f.ring());
    for (std::size_t j = 0; j < p; ++j) rebuilt = rebuilt + inflate(w.sections[j], p).shifted(j);
    if (rebuilt != w.factor) return false;

    // The cofactor really complements P inside the circulant determinant.
    if (w.factor * w.cofactor != witness_determinant(w.sections)) return false;

    // Full identity at n, substituting X^(n/t): the prime branch carries the
    // sign (-1)^(m(p-1)), the four branch none.
    const std::size_t k = static_cast<std::size_t>(n / t);
    Polynomial lhs = inflate(f, static_cast<std::size_t>(n)).scaled(w.u);
    Polynomial rhs = inflate(w.factor, k) * inflate(w.cofactor, k);
    if (w.branch == WitnessBranch::prime && m % 2 == 1 && w.p == 2) rhs = -rhs;
    return lhs == rhs;
}

bool char_p_inflation_reducible(const Polynomial& f, std::uint64_t s) {
    const std::int64_t chi = f.ring().characteristic();
    if (chi == 0)
        throw std::invalid_argument("char_p_inflation_reducible: requires positive characteristic");
    if (s == 0) throw std::invalid_argument("char_p_inflation_reducible: s must be positive");
    if (f.is_zero() || f.degree() == 0)
        throw std::domain_error("char_p_inflation_reducible: f must have positive degree");
    for (const RingElement& u : units(f.ring())) {
        const Polynomial g = f.scaled(u);
        bool all = true;
        for (const RingElement& c : g.coefficients())
            if (!is_pth_power(c, chi)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

CyclotomicRecord cyclotomic(const RingDescriptor& ring, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
    const std::int64_t chi = ring.characteristic();
    if (chi != 0 && n % chi == 0) throw std::invalid_argument("cyclotomic: characteristic divides n");
    Polynomial phi = Polynomial::monomial(RingElement::one(ring), static_cast<std::size_t>(n)) -
                     Polynomial::constant(RingElement::one(ring));
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto q = try_divide_exact(phi, cyclotomic(ring, d).phi);
        if (!q) throw std::logic_error("cyclotomic: inexact division");
        phi = std::move(*q);
    }
    return {n, phi, euler_totient(static_cast<std::uint64_t>(n))};
}

std::pair<std::uint64_t, std::uint64_t> cyclotomic_factor_count(std::int64_t n, std::int64_t q) {
    if (n < 1) throw std::invalid_argument("cyclotomic_factor_count: n must be positive");
    if (q < 2 || !is_prime_u64(static_cast<std::uint64_t>(q)))
        throw std::invalid_argument("cyclotomic_factor_count: q must be prime");
    if (std::gcd(n, q) != 1)
        throw std::invalid_argument("cyclotomic_factor_count: q and n must be coprime");
    const std::uint64_t d =
        multiplicative_order(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(n));
    return {d, euler_totient(static_cast<std::uint64_t>(n)) / d};
}

bool cofactor_coprime_criterion(std::uint64_t m, std::int64_t p) {
    if (m == 0) throw std::invalid_argument("cofactor_coprime_criterion: m must be positive");
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("cofactor_coprime_criterion: p must be prime");
    return std::gcd(m, static_cast<std::uint64_t>(p - 1)) == 1;
}

}  // namespace capelli
