#pragma once

#include <cstdint>
#include <span>

#include <gmpxx.h>

#include "wgcseq/sequence.hpp"

namespace wgc {

/// Exact 2-adic complexity report for one sequence.
///
/// m/n is the reduced form of S(2)/(2^N - 1): n = (2^N - 1)/g, m = S(2)/g,
/// gcd(m, n) = 1, 0 <= m <= n. phi2 = floor(log2(n + 1)) computed from the
/// bit length of n + 1, never from floating point. The 2-adic value of the
/// purely periodic stream is -m/n; m is reported unsigned with the sign
/// carried separately.
struct AdicReport {
    SequenceParams params;
    mpz_class s2;
    mpz_class modulus;  // 2^N - 1
    mpz_class g;        // gcd(S(2), 2^N - 1)
    mpz_class m;
    mpz_class n;
    std::uint64_t phi2 = 0;
    std::uint64_t lower_bound = 0;  // pq - p - q - 1
    bool meets_lower_bound = false;
    bool is_maximal = false;             // phi2 == N, equivalently g == 1
    bool periodic_value_negative = false;  // the stream's 2-adic value is -m/n
    bool degenerate = false;             // all-zero input
};

/// Exact 2-adic complexity of one period. Requires N < 2^20.
AdicReport two_adic_complexity(const BinarySequence& seq);

enum class VerdictStatus { Applicable, NotApplicable };

struct Verdict {
    VerdictStatus status = VerdictStatus::NotApplicable;
    bool holds = false;  // meaningful only when applicable
};

/// phi2 >= pq - p - q - 1, gated on strict params with |q-p| < sqrt(pq) - 1.
Verdict lower_bound_verdict(const AdicReport& report);

/// phi2 == N (equivalently gcd(S(2), 2^N - 1) == 1), gated on strict params
/// with q - p = 2.
Verdict maximality_verdict(const AdicReport& report);

/// Per-side check of the Mersenne cofactor identity
/// gcd(2^p - 1, (2^pq - 1)/(2^p - 1)) == gcd(2^p - 1, q) (and symmetrically).
/// The side with the larger exponent must additionally be coprime to its
/// cofactor.
struct MersennePairCheck {
    bool p_side = false;
    bool q_side = false;
};

MersennePairCheck mersenne_gcd_check(std::uint64_t p, std::uint64_t q);

enum class DivisibilityStatus { Holds, Fails, NotApplicable };

/// Whether gcd(S(2), 2^N - 1) divides gcd(det, 2^N - 1).
/// det == 0 yields NotApplicable.
DivisibilityStatus gcd_divisibility_check(const BinarySequence& seq, const mpz_class& det);

/// Rational approximation recovered from a 2-adic prefix: n odd and positive,
/// gcd(m, n) = 1, max(|m|, |n|) minimal among lattice solutions whose 2-adic
/// expansion of m/n agrees with the prefix on its first T bits.
struct RationalApprox {
    mpz_class m;
    mpz_class n;
};

/// Minimal rational approximation of a 2-adic prefix (T >= 2) via exact
/// two-dimensional lattice reduction. For an eventually periodic stream with
/// reduced value m*/n*, the output equals (m*, n*) once
/// T > 2 * max(bitlen(m*), bitlen(n*)) + 2.
RationalApprox raa_synthesize(std::span<const std::uint8_t> prefix);

/// Exact bit length helper: number of bits of v > 0, 0 for v == 0.
std::uint64_t bit_length(const mpz_class& v);

}  // namespace wgc
