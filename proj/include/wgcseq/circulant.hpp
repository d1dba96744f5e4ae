#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "wgcseq/sequence.hpp"
#include "wgcseq/spectra.hpp"

namespace wgc {

/// Largest period accepted by the exact determinant.
inline constexpr std::uint64_t kMaxDetPeriod = 1024;

/// Hadamard bound on |det| of the 0/1 circulant: weight^(N/2), rounded up.
mpz_class hadamard_bound(const BinarySequence& seq);

/// Deterministic list of word-sized primes strictly below `below`, descending,
/// whose product exceeds min_product.
std::vector<std::uint64_t> det_prime_moduli(const mpz_class& min_product,
                                            std::uint64_t below = 1ull << 62);

/// Exact determinant of the N x N circulant a_{i,j} = s_{(i-j) mod N} by
/// Gaussian elimination modulo each prime and signed CRT reconstruction.
/// Residues are computed concurrently; the combination is a deterministic
/// fold in list order.
mpz_class det_exact(const BinarySequence& seq);
mpz_class det_exact(const BinarySequence& seq, std::span<const std::uint64_t> primes);

enum class MatchedSign { Plus, Minus, None };

std::string_view to_string(MatchedSign sign);

/// Exact determinant next to both closed-form candidates. matched_sign is
/// None when neither candidate equals the exact value (a failed verification,
/// not an error).
struct DetReport {
    mpz_class det_exact;
    mpz_class det_plus;
    mpz_class det_minus;
    MatchedSign matched_sign = MatchedSign::None;
    mpz_class hadamard_bound;
    int primes_used = 0;
};

DetReport match_closed_form(const BinarySequence& seq, const DetClosedForm& cf);

}  // namespace wgc
