#include "wgcseq/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace wgc {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t qq = r / new_r;
        t = std::exchange(new_t, t - qq * new_t);
        r = std::exchange(new_r, r - qq * new_r);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: argument not invertible");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Pollard rho with Floyd cycle detection. n must be odd composite.
std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto step = [n, c](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            const std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = 1;
    for (const auto& [pr, ex] : factorize(n)) {
        phi *= pr - 1;
        for (int i = 1; i < ex; ++i) phi *= pr;
    }
    return phi;
}

// g is a primitive root mod prime p iff g^((p-1)/r) != 1 for every prime r | p-1.
bool is_primitive_root(std::uint64_t g, std::uint64_t p,
                       const std::vector<std::pair<std::uint64_t, int>>& p1_factors) {
    if (g % p == 0) return false;
    for (const auto& [r, ex] : p1_factors) {
        (void)ex;
        if (pow_mod(g, (p - 1) / r, p) == 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == sp) return true;
        if (n % sp == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Exact for all n < 2^64 with this witness set.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    std::vector<std::uint64_t> primes;
    // Strip small factors first so rho only sees hard composites.
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % d == 0 && n > 1) {
            primes.push_back(d);
            n /= d;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t pr : primes) {
        if (!out.empty() && out.back().first == pr)
            ++out.back().second;
        else
            out.emplace_back(pr, 1);
    }
    return out;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("mult_order: modulus must be >= 2");
    if (std::gcd(a, n) != 1) throw std::invalid_argument("mult_order: gcd(a, n) != 1");
    const std::uint64_t phi = euler_phi(n);
    std::uint64_t k = phi;
    for (const auto& [r, ex] : factorize(phi)) {
        (void)ex;
        while (k % r == 0 && pow_mod(a, k / r, n) == 1) k /= r;
    }
    return k;
}

std::uint64_t find_common_primitive_root(std::uint64_t p, std::uint64_t q) {
    const auto fp = factorize(p - 1);
    const auto fq = factorize(q - 1);
    for (std::uint64_t g = 2; g < p * q; ++g) {
        if (is_primitive_root(g, p, fp) && is_primitive_root(g, q, fq)) return g;
    }
    throw ParamError("no-common-primitive-root",
                     "no common primitive root of " + std::to_string(p) + " and " + std::to_string(q));
}

std::uint64_t crt_x(std::uint64_t p, std::uint64_t q, std::uint64_t g) {
    const std::uint64_t n = p * q;
    const std::uint64_t a = g % p;
    // x = a*q*(q^-1 mod p) + p*(p^-1 mod q)  (mod n)
    const unsigned __int128 t1 =
        static_cast<unsigned __int128>(a) * q % n * inv_mod(q % p, p) % n;
    const unsigned __int128 t2 =
        static_cast<unsigned __int128>(p) * inv_mod(p % q, q) % n;
    return static_cast<std::uint64_t>((t1 + t2) % n);
}

SequenceParams make_params(std::uint64_t p, std::uint64_t q, bool strict, std::uint64_t g_override) {
    if (!is_prime(p) || !is_prime(q) || p == 2 || q == 2)
        throw ParamError("not-prime", "p and q must be distinct odd primes");
    if (p == q) throw ParamError("equal-primes", "p and q must be distinct");
    if (p >= kMaxPrimeParam || q >= kMaxPrimeParam)
        throw ParamError("size-cap", "p and q must be below 2^20");
    if (std::gcd(p - 1, q - 1) != 2)
        throw ParamError("gcd-not-2", "gcd(p-1, q-1) must equal 2");
    if (strict && (p % 4 != 1 || q % 4 != 3))
        throw ParamError("congruence-violation",
                         "strict mode requires p = 1 (mod 4) and q = 3 (mod 4)");

    SequenceParams params;
    params.p = p;
    params.q = q;
    params.n = p * q;
    params.e = (p - 1) * (q - 1) / 2;
    params.strict = strict;

    if (g_override != 0) {
        const auto fp = factorize(p - 1);
        const auto fq = factorize(q - 1);
        if (g_override < 2 || g_override >= params.n ||
            !is_primitive_root(g_override, p, fp) || !is_primitive_root(g_override, q, fq))
            throw ParamError("invalid-g", "g is not a common primitive root of p and q");
        params.g = g_override;
    } else {
        params.g = find_common_primitive_root(p, q);
    }
    params.x = crt_x(p, q, params.g);

    const std::uint64_t gap = p > q ? p - q : q - p;
    params.lower_bound_applicable = (gap + 1) * (gap + 1) < params.n;  // |q-p| < sqrt(pq) - 1
    params.maximality_applicable = (q == p + 2);
    return params;
}

}  // namespace wgc
