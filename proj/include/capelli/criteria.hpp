#pragma once

#include <capelli/poly.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace capelli {

// One row of a condition trace.  A prime row for p | n checks
// (u*a not in Z^p) or ((-1)^m*u*b not in Z^p); a four-branch row (present
// when 4 | n) checks (u*a not in Z^2) or (u*b not in Z^2).
struct ConditionRow {
    bool four_branch;
    std::int64_t p;  // the prime tested (2 on four-branch rows)
    RingElement u;
    bool a_holds;
    bool b_holds;
    bool ok() const { return a_holds || b_holds; }
};

struct ConditionTrace {
    std::uint64_t m;
    RingElement a, b;
    std::int64_t n;
    std::vector<ConditionRow> rows;  // primes ascending x units in ring order, then four-branch rows
    bool verdict;                    // every row satisfied
};

ConditionTrace evaluate_condition(std::uint64_t m, const RingElement& a, const RingElement& b,
                                  std::int64_t n);

enum class VerdictStatus {
    irreducible_by_criterion,
    criterion_silent,
    reducible_by_oracle,
    irreducible_by_oracle,
    oracle_budget_exceeded,
};

enum class Direction { direct, dual };

struct Verdict {
    VerdictStatus status;
    std::optional<Direction> direction;
    std::optional<ConditionTrace> trace;  // the succeeding trace, or the direct one when silent
};

// One-sided test: if the condition holds for (m, a, b, n) with a, b the
// leading and constant coefficients of f -- or with the roles swapped -- then
// f(X^n) is irreducible whenever f is.  Never claims reducibility.
// verify_input routes f through the factorization oracle first; this is the
// module's only oracle call and exists solely to check the precondition.
Verdict criterion_check(const Polynomial& f, std::int64_t n, bool verify_input = false,
                        WorkMeter* meter = nullptr);

struct BinomialCertificate {
    enum class Kind { prime_power, minus_four_fourth };
    Kind kind;
    std::int64_t t;  // the prime for prime_power; 4 for minus_four_fourth
    Fraction c;
};

// Decides reducibility of X^n - a for a = num/den in the fraction field of
// Z or Z[i]: a certificate means a = c^t for a prime t | n, or 4 | n and
// a = -4c^4; nullopt means X^n - a is irreducible.
std::optional<BinomialCertificate> binomial_reducible(const RingElement& num,
                                                      const RingElement& den, std::int64_t n);

// Product of the distinct primes dividing n.
std::int64_t squarefree_part(std::int64_t n);

// {p prime : p | n}, ascending, plus 4 appended when 4 | n.  f(X^n) is
// reducible iff f(X^t) is reducible for some listed t.
std::vector<std::int64_t> reduction_exponents(std::int64_t n);

}  // namespace capelli
