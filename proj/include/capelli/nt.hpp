#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

using Int = boost::multiprecision::cpp_int;

// Thrown when a bounded brute-force search exhausts its work allowance.
// Callers must treat this as "undecided", never as an answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic work counter shared by the exhaustive searches. One unit is one
// candidate considered (trial divisor, divisor-tuple extension, division attempt);
// identical inputs always charge identical amounts.
struct WorkMeter {
    std::uint64_t limit;
    std::uint64_t used = 0;

    explicit WorkMeter(std::uint64_t limit_) : limit(limit_) {}

    void charge(std::uint64_t amount = 1) {
        used += amount;
        if (used > limit) throw BudgetExceeded("oracle budget exceeded");
    }
};

bool is_prime_u64(std::uint64_t n);

// Prime factorization, ascending primes. n >= 1.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

// Distinct prime divisors of n >= 1, ascending.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

std::uint64_t euler_totient(std::uint64_t n);

// Least d >= 1 with q^d = 1 (mod n). Requires n >= 1 and gcd(q, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n);

// Exact k-th root of x >= 0 if one exists, k >= 1.
std::optional<Int> integer_kth_root(const Int& x, std::uint64_t k);

// Factorization of v > 0 with ascending primes. Uses a deterministic 64-bit fast
// path and metered trial division beyond that; every step charges the meter.
std::vector<std::pair<Int, int>> factor_value(const Int& v, WorkMeter& meter);

}  // namespace capelli
