#include <capelli/nt.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

namespace capelli {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Floyd-cycle rho. Deterministic: the increment c is stepped until a proper
// factor appears, so equal inputs always take equal paths. Callers guarantee
// n is composite and odd.
std::uint64_t rho_factor(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            if (x == y) {
                d = n;  // hit the cycle without a factor, retry with next c
                break;
            }
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_u64_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = rho_factor(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set decides primality for every 64-bit integer.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor_u64: zero");
    std::vector<std::uint64_t> primes;
    // Strip small primes first so rho only sees hard cofactors.
    for (std::uint64_t p = 2; p < 100 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_u64_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.push_back({p, 1});
    }
    return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("prime_divisors: n must be positive");
    std::vector<std::int64_t> out;
    for (auto& [p, e] : factor_u64(static_cast<std::uint64_t>(n))) out.push_back(static_cast<std::int64_t>(p));
    return out;
}

std::uint64_t euler_totient(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_totient: zero");
    std::uint64_t phi = n;
    for (auto& [p, e] : factor_u64(n)) phi = phi / p * (p - 1);
    return phi;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("multiplicative_order: modulus zero");
    if (n == 1) return 1;
    if (std::gcd(q % n, n) != 1) throw std::invalid_argument("multiplicative_order: arguments not coprime");
    std::uint64_t acc = q % n, d = 1;
    while (acc != 1) {
        acc = mulmod(acc, q % n, n);
        ++d;
    }
    return d;
}

std::optional<Int> integer_kth_root(const Int& x, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("integer_kth_root: k must be positive");
    if (x < 0) throw std::invalid_argument("integer_kth_root: negative input");
    if (x == 0 || x == 1 || k == 1) {
        if (k == 1) return x;
        return x;  // 0 or 1
    }
    std::uint64_t bits = msb(x) + 1;
    Int lo = 1, hi = Int(1) << (bits / k + 1);
    while (lo < hi) {  // smallest r with r^k > x, minus one
        Int mid = (lo + hi + 1) / 2;
        if (pow(mid, static_cast<unsigned>(k)) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    if (pow(lo, static_cast<unsigned>(k)) == x) return lo;
    return std::nullopt;
}

std::vector<std::pair<Int, int>> factor_value(const Int& v, WorkMeter& meter) {
    if (v <= 0) throw std::invalid_argument("factor_value: input must be positive");
    std::vector<std::pair<Int, int>> out;
    Int rest = v;
    if (rest > std::numeric_limits<std::uint64_t>::max()) {
        // Metered trial division until the cofactor fits in 64 bits or is exhausted.
        Int p = 2;
        while (rest > std::numeric_limits<std::uint64_t>::max()) {
            meter.charge();
            if (p * p > rest) break;
            if (rest % p == 0) {
                int e = 0;
                while (rest % p == 0) {
                    rest /= p;
                    ++e;
                }
                out.push_back({p, e});
            }
            p += (p == 2 ? 1 : 2);
        }
        if (rest > std::numeric_limits<std::uint64_t>::max()) {
            out.push_back({rest, 1});  // p*p exceeded rest, so the cofactor is prime
            return out;
        }
    }
    if (rest > 1) {
        meter.charge(64);
        for (auto& [p, e] : factor_u64(rest.convert_to<std::uint64_t>())) out.push_back({Int(p), e});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace capelli
