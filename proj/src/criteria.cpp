#include <capelli/criteria.hpp>
#include <capelli/factor.hpp>

#include <stdexcept>
#include <utility>

namespace capelli {

ConditionTrace evaluate_condition(std::uint64_t m, const RingElement& a, const RingElement& b,
                                  std::int64_t n) {
    if (m == 0) throw std::invalid_argument("condition: m must be positive");
    if (a.ring() != b.ring()) throw std::invalid_argument("condition: mixed rings");
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("condition: a and b must be nonzero");
    if (n < 2) throw std::invalid_argument("condition: n must be at least 2");

    ConditionTrace tr{m, a, b, n, {}, true};
    const std::vector<RingElement> us = units(a.ring());
    const RingElement mb = (m % 2 == 1) ? -b : b;  // (-1)^m b
    for (std::int64_t p : prime_divisors(n)) {
        for (const RingElement& u : us) {
            bool ah = !is_pth_power(u * a, p).has_value();
            bool bh = !is_pth_power(u * mb, p).has_value();
            tr.rows.push_back({false, p, u, ah, bh});
        }
    }
    if (n % 4 == 0) {
        for (const RingElement& u : us) {
            bool ah = !is_pth_power(u * a, 2).has_value();
            bool bh = !is_pth_power(u * b, 2).has_value();
            tr.rows.push_back({true, 2, u, ah, bh});
        }
    }
    for (const ConditionRow& row : tr.rows)
        if (!row.ok()) tr.verdict = false;
    return tr;
}

Verdict criterion_check(const Polynomial& f, std::int64_t n, bool verify_input, WorkMeter* meter) {
    if (f.is_zero() || f.degree() == 0) throw std::domain_error("criterion: f must have positive degree");
    if (f.coeff(0).is_zero()) throw std::domain_error("criterion: f must have a nonzero constant term");
    if (n < 2) throw std::invalid_argument("criterion: n must be at least 2");
    if (verify_input) {
        // Precondition guard only: the criterion itself never consults the oracle.
        WorkMeter local{default_oracle_work};
        if (!is_irreducible(f, meter ? *meter : local))
            throw std::domain_error("criterion: f is reducible, the test does not apply");
    }

    const std::uint64_t m = f.degree();
    const RingElement a = f.leading();
    const RingElement b = f.coeff(0);
    ConditionTrace direct = evaluate_condition(m, a, b, n);
    if (direct.verdict)
        return {VerdictStatus::irreducible_by_criterion, Direction::direct, std::move(direct)};
    ConditionTrace dual = evaluate_condition(m, b, a, n);
    if (dual.verdict)
        return {VerdictStatus::irreducible_by_criterion, Direction::dual, std::move(dual)};
    return {VerdictStatus::criterion_silent, std::nullopt, std::move(direct)};
}

namespace {

// num/den in lowest terms is a t-th power of the fraction field iff
// num * den^(t-1) is a t-th power of the ring; the root r then gives r/den.
std::optional<Fraction> fraction_root(const Fraction& x, std::int64_t t) {
    RingElement scaled = x.num * x.den.pow(static_cast<std::uint64_t>(t - 1));
    auto r = is_pth_power(scaled, t);
    if (!r) return std::nullopt;
    return Fraction::make(*r, x.den);
}

}  // namespace

std::optional<BinomialCertificate> binomial_reducible(const RingElement& num,
                                                      const RingElement& den, std::int64_t n) {
    if (num.ring() != den.ring()) throw std::invalid_argument("binomial: mixed rings");
    if (num.ring().kind == RingKind::prime_field)
        throw std::invalid_argument("binomial: defined over the fraction field of Z or Z[i]");
    if (num.is_zero() || den.is_zero()) throw std::domain_error("binomial: zero numerator or denominator");
    if (n < 2) throw std::invalid_argument("binomial: n must be at least 2");

    const Fraction a = Fraction::make(num, den);
    for (std::int64_t t : prime_divisors(n)) {
        if (auto c = fraction_root(a, t))
            return BinomialCertificate{BinomialCertificate::Kind::prime_power, t, *c};
    }
    if (n % 4 == 0) {
        // a = -4c^4 iff -a/4 is a fourth power; take two square roots, trying
        // both signs at the middle step (square roots differ by a sign).
        Fraction z = Fraction::make(-a.num, a.den * RingElement(num.ring(), 4));
        if (auto w = fraction_root(z, 2)) {
            if (auto c = fraction_root(*w, 2))
                return BinomialCertificate{BinomialCertificate::Kind::minus_four_fourth, 4, *c};
            Fraction neg{-w->num, w->den};
            if (auto c = fraction_root(neg, 2))
                return BinomialCertificate{BinomialCertificate::Kind::minus_four_fourth, 4, *c};
        }
    }
    return std::nullopt;
}

std::int64_t squarefree_part(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("squarefree_part: n must be positive");
    std::int64_t out = 1;
    for (std::int64_t p : prime_divisors(n)) out *= p;
    return out;
}

std::vector<std::int64_t> reduction_exponents(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("reduction_exponents: n must be at least 2");
    std::vector<std::int64_t> out = prime_divisors(n);
    if (n % 4 == 0) out.push_back(4);
    return out;
}

}  // namespace capelli
