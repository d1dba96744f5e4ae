#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wgc {

// Largest admissible prime parameter. Keeps N = p*q and the derived
// big-integer work (2^N - 1, circulant determinants) at desk scale.
inline constexpr std::uint64_t kMaxPrimeParam = 1ull << 20;

/// Parameter validation failure with a stable machine-readable reason code
/// ("not-prime", "gcd-not-2", "congruence-violation", ...).
class ParamError : public std::runtime_error {
public:
    ParamError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Validated parameter bundle for one sequence construction of period n = p*q.
///
/// Invariants: p, q distinct odd primes with gcd(p-1, q-1) = 2; g is a common
/// primitive root of p and q; x is the unique residue mod n with x = g (mod p)
/// and x = 1 (mod q); e = (p-1)(q-1)/2. In strict mode additionally
/// p = 1 (mod 4) and q = 3 (mod 4).
struct SequenceParams {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t n = 0;  // period p*q
    std::uint64_t g = 0;  // common primitive root of p and q
    std::uint64_t x = 0;  // CRT element: x = g (mod p), x = 1 (mod q)
    std::uint64_t e = 0;  // (p-1)(q-1)/2
    bool strict = true;
    // |q-p| < sqrt(pq) - 1, the condition under which the general
    // lower bound pq - p - q - 1 applies.
    bool lower_bound_applicable = false;
    // q - p = 2, the condition under which the complexity is maximal.
    bool maximality_applicable = false;
};

/// Deterministic 64-bit primality test (Miller-Rabin with a fixed witness
/// set that is exact for all 64-bit inputs). is_prime(1) == false.
bool is_prime(std::uint64_t n);

/// Prime factorization of a 64-bit integer as (prime, exponent) pairs,
/// sorted by prime. Uses trial division plus Pollard rho for large factors.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Smallest k >= 1 with a^k = 1 (mod n). Computed by reducing phi(n)
/// through its prime factors, never by linear scan.
/// Throws std::invalid_argument if gcd(a, n) != 1 or n < 2.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t n);

/// Smallest g >= 2 that is a primitive root of both p and q.
/// Throws ParamError("no-common-primitive-root") if none exists below pq.
std::uint64_t find_common_primitive_root(std::uint64_t p, std::uint64_t q);

/// Unique x in [0, pq) with x = g (mod p) and x = 1 (mod q).
std::uint64_t crt_x(std::uint64_t p, std::uint64_t q, std::uint64_t g);

/// Validate (p, q) and assemble SequenceParams with the smallest common
/// primitive root (or g_override if nonzero). strict additionally enforces
/// p = 1 (mod 4), q = 3 (mod 4).
///
/// Throws ParamError with one of the codes: "not-prime", "equal-primes",
/// "size-cap", "gcd-not-2", "congruence-violation", "invalid-g".
SequenceParams make_params(std::uint64_t p, std::uint64_t q, bool strict = true,
                           std::uint64_t g_override = 0);

// Modular helpers shared across modules. All moduli must be nonzero.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);  // throws if not invertible

}  // namespace wgc
