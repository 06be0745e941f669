#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <capelli/criteria.hpp>
#include <capelli/factor.hpp>

#include <stdexcept>
#include <vector>

using namespace capelli;

namespace {

const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor Zi = RingDescriptor::gaussian();

RingElement z(std::int64_t v) { return RingElement(Z, v); }
Polynomial zp(const std::vector<std::int64_t>& ascending) { return Polynomial::from_ints(Z, ascending); }

bool oracle_irreducible(const Polynomial& f) {
    WorkMeter meter{default_oracle_work};
    return is_irreducible(f, meter);
}

}  // namespace

TEST_CASE("condition rows enumerate primes ascending, then the four branch") {
    const auto t = evaluate_condition(1, z(1), z(2), 12);
    CHECK(t.m == 1);
    CHECK(t.n == 12);
    REQUIRE(t.rows.size() == 6);  // p=2 and p=3 over two units, then two four-branch rows
    CHECK(t.rows[0].p == 2);
    CHECK(!t.rows[0].four_branch);
    CHECK(t.rows[2].p == 3);
    CHECK(t.rows[4].four_branch);
    CHECK(t.rows[4].p == 2);
    CHECK(t.rows[0].u == z(1));
    CHECK(t.rows[1].u == z(-1));
}

TEST_CASE("condition verdicts on hand-checked inputs") {
    // lead 1, constant -1, odd degree: both squares spoil every n with 2 | n
    CHECK(!evaluate_condition(3, z(1), z(-1), 2).verdict);
    CHECK(evaluate_condition(2, z(1), z(2), 3).verdict);
    CHECK(evaluate_condition(1, z(1), z(2), 4).verdict);   // X^4+2 stays irreducible
    CHECK(evaluate_condition(2, z(8), z(9), 12).verdict);  // cross-prime pairs are fine
    CHECK(!evaluate_condition(1, z(1), z(4), 4).verdict);  // the four branch catches X^4+4

    // row bookkeeping on a failing case: u=1 violates both clauses
    const auto t = evaluate_condition(3, z(1), z(-1), 2);
    REQUIRE(t.rows.size() == 2);
    CHECK(!t.rows[0].a_holds);
    CHECK(!t.rows[0].b_holds);
    CHECK(!t.rows[0].ok());

    // gaussian integers: 8i pairs with 1 to block every even n
    CHECK(!evaluate_condition(1, RingElement(Zi, 1), RingElement(Zi, 0, 8), 2).verdict);
    CHECK(evaluate_condition(1, RingElement(Zi, 1), RingElement(Zi, 0, 8), 5).verdict);

    // prime field: unit cosets decide everything
    const RingDescriptor F7 = RingDescriptor::prime_field(7);
    CHECK(!evaluate_condition(1, RingElement(F7, 1), RingElement(F7, 3), 2).verdict);
    CHECK(evaluate_condition(2, RingElement(F7, 3), RingElement(F7, 1), 2).verdict);
}

TEST_CASE("condition validates its inputs") {
    CHECK_THROWS_AS(evaluate_condition(0, z(1), z(1), 2), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_condition(1, z(0), z(1), 2), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_condition(1, z(1), z(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_condition(1, z(1), RingElement(Zi, 1), 2), std::invalid_argument);
}

TEST_CASE("unit scaling never changes the verdict") {
    for (std::int64_t n : {2, 3, 4, 6, 12}) {
        const bool base = evaluate_condition(2, z(8), z(9), n).verdict;
        for (const auto& e : units(Z))
            for (const auto& d : units(Z))
                CHECK(evaluate_condition(2, e * z(8), d * z(9), n).verdict == base);

        const RingElement a(Zi, 1, 1), b(Zi, 0, 8);
        const bool gbase = evaluate_condition(3, a, b, n).verdict;
        for (const auto& e : units(Zi))
            for (const auto& d : units(Zi))
                CHECK(evaluate_condition(3, e * a, d * b, n).verdict == gbase);
    }
}

TEST_CASE("criterion check reports status, direction, and trace") {
    const Verdict silent = criterion_check(zp({-1, -2, -1, 1}), 2);
    CHECK(silent.status == VerdictStatus::criterion_silent);
    CHECK(!silent.direction.has_value());
    REQUIRE(silent.trace.has_value());
    CHECK(!silent.trace->verdict);

    const Verdict hit = criterion_check(zp({9, 4}), 2);  // 4x+9
    CHECK(hit.status == VerdictStatus::irreducible_by_criterion);
    CHECK(hit.direction == Direction::direct);
    REQUIRE(hit.trace.has_value());
    CHECK(hit.trace->verdict);

    // same polynomial goes quiet once the four branch joins at n = 4
    CHECK(criterion_check(zp({9, 4}), 4).status == VerdictStatus::criterion_silent);

    CHECK(criterion_check(zp({3, 2, 2}), 6).status == VerdictStatus::irreducible_by_criterion);
}

TEST_CASE("criterion check validates inputs and optionally the precondition") {
    CHECK_THROWS_AS(criterion_check(zp({5}), 2), std::domain_error);
    CHECK_THROWS_AS(criterion_check(zp({0, 1}), 2), std::domain_error);   // constant term zero
    CHECK_THROWS_AS(criterion_check(zp({1, 1}), 1), std::invalid_argument);

    CHECK_THROWS_AS(criterion_check(zp({-1, 0, 1}), 2, true), std::domain_error);  // reducible
    CHECK_THROWS_AS(criterion_check(zp({2, 2}), 2, true), std::domain_error);      // imprimitive
    // a=b=1 satisfies every unit row, so the condition cannot certify x^2+1
    CHECK(criterion_check(zp({1, 0, 1}), 2, true).status == VerdictStatus::criterion_silent);
    CHECK(criterion_check(zp({9, 4}), 2, true).status == VerdictStatus::irreducible_by_criterion);
}

TEST_CASE("swapping the outer coefficients preserves the status") {
    // the reciprocal of f swaps the roles of the leading and constant terms
    for (const auto& coeffs : std::vector<std::vector<std::int64_t>>{
             {-1, -2, -1, 1}, {9, 4}, {3, 0, 0, 2}, {3, 2, 2}, {-5, 1, 0, 2}}) {
        const Polynomial f = zp(coeffs);
        const Polynomial r = reciprocal(f);
        for (std::int64_t n = 2; n <= 12; ++n) {
            CAPTURE(n);
            CHECK(criterion_check(f, n).status == criterion_check(r, n).status);
        }
    }
}

TEST_CASE("positive verdicts are confirmed by the oracle on small cases") {
    // criterion says these inflations stay irreducible; the oracle agrees
    CHECK(criterion_check(zp({9, 4}), 2).status == VerdictStatus::irreducible_by_criterion);
    CHECK(oracle_irreducible(inflate(zp({9, 4}), 2)));

    CHECK(criterion_check(zp({3, 2, 2}), 2).status == VerdictStatus::irreducible_by_criterion);
    CHECK(oracle_irreducible(inflate(zp({3, 2, 2}), 2)));

    // and silence really is one-sided: this inflation happens to be irreducible
    CHECK(criterion_check(zp({9, 0, 1}), 2).status == VerdictStatus::criterion_silent);
    CHECK(oracle_irreducible(inflate(zp({9, 0, 1}), 2)));  // X^4+9
}

TEST_CASE("binomial certificates over the integers") {
    const auto sg = binomial_reducible(z(-4), z(1), 4);
    REQUIRE(sg.has_value());
    CHECK(sg->kind == BinomialCertificate::Kind::minus_four_fourth);
    CHECK(sg->t == 4);
    CHECK(sg->c == Fraction::make(z(1), z(1)));

    const auto sq = binomial_reducible(z(16), z(1), 4);
    REQUIRE(sq.has_value());
    CHECK(sq->kind == BinomialCertificate::Kind::prime_power);
    CHECK(sq->t == 2);
    CHECK(sq->c == Fraction::make(z(4), z(1)));

    const auto cube = binomial_reducible(z(-8), z(1), 6);
    REQUIRE(cube.has_value());
    CHECK(cube->t == 3);
    CHECK(cube->c == Fraction::make(z(-2), z(1)));

    CHECK(!binomial_reducible(z(2), z(1), 2).has_value());
    CHECK(!binomial_reducible(z(2), z(1), 4).has_value());
    CHECK(!binomial_reducible(z(-9), z(1), 4).has_value());  // X^4+9 again

    const auto frac = binomial_reducible(z(16), z(81), 2);
    REQUIRE(frac.has_value());
    CHECK(frac->c == Fraction::make(z(4), z(9)));

    const auto one = binomial_reducible(z(1), z(1), 7);
    REQUIRE(one.has_value());
    CHECK(one->t == 7);
    CHECK(one->c == Fraction::make(z(1), z(1)));
}

TEST_CASE("binomial certificates over the gaussian integers") {
    // -4 = (2i)^2, so the minus-four case is swallowed by the square case
    const auto g = binomial_reducible(RingElement(Zi, -4), RingElement(Zi, 1), 4);
    REQUIRE(g.has_value());
    CHECK(g->kind == BinomialCertificate::Kind::prime_power);
    CHECK(g->t == 2);
    CHECK(g->c == Fraction::make(RingElement(Zi, 0, 2), RingElement(Zi, 1)));

    CHECK(!binomial_reducible(RingElement(Zi, 1, 1), RingElement(Zi, 1), 2).has_value());
    const auto i8 = binomial_reducible(RingElement(Zi, 0, 8), RingElement(Zi, 1), 2);
    REQUIRE(i8.has_value());
    CHECK(i8->c.num * i8->c.num == RingElement(Zi, 0, 8));
}

TEST_CASE("binomial validation") {
    CHECK_THROWS_AS(binomial_reducible(z(0), z(1), 2), std::domain_error);
    CHECK_THROWS_AS(binomial_reducible(z(1), z(0), 2), std::domain_error);
    CHECK_THROWS_AS(binomial_reducible(z(1), z(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(binomial_reducible(z(1), RingElement(Zi, 1), 2), std::invalid_argument);
    const RingDescriptor F7 = RingDescriptor::prime_field(7);
    CHECK_THROWS_AS(binomial_reducible(RingElement(F7, 1), RingElement(F7, 1), 2),
                    std::invalid_argument);
}

TEST_CASE("binomial test agrees with the oracle on a small sweep") {
    for (std::int64_t a = -20; a <= 20; ++a) {
        if (a == 0) continue;
        for (std::int64_t n = 2; n <= 8; ++n) {
            CAPTURE(a);
            CAPTURE(n);
            const auto cert = binomial_reducible(z(a), z(1), n);
            Polynomial f = Polynomial::monomial(z(1), static_cast<std::size_t>(n)) -
                           Polynomial::constant(z(a));
            CHECK(cert.has_value() == !oracle_irreducible(f));
            if (cert.has_value() && cert->kind == BinomialCertificate::Kind::prime_power) {
                // the certificate reconstructs a: a = c^t
                CHECK(cert->c.num.pow(static_cast<std::uint64_t>(cert->t)) ==
                      z(a) * cert->c.den.pow(static_cast<std::uint64_t>(cert->t)));
            }
        }
    }
}

TEST_CASE("squarefree part and reduction exponents") {
    CHECK(squarefree_part(12) == 6);
    CHECK(squarefree_part(1) == 1);
    CHECK(squarefree_part(97) == 97);
    CHECK(squarefree_part(360) == 30);
    CHECK_THROWS_AS(squarefree_part(0), std::invalid_argument);

    CHECK(reduction_exponents(12) == std::vector<std::int64_t>{2, 3, 4});
    CHECK(reduction_exponents(8) == std::vector<std::int64_t>{2, 4});
    CHECK(reduction_exponents(6) == std::vector<std::int64_t>{2, 3});
    CHECK(reduction_exponents(2) == std::vector<std::int64_t>{2});
    CHECK(reduction_exponents(9) == std::vector<std::int64_t>{3});
    CHECK_THROWS_AS(reduction_exponents(1), std::invalid_argument);
}
