#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wgcseq/cyclotomy.hpp"

namespace wgc {

/// One period of the balanced binary sequence: bit i is 1 iff i lies in C_1,
/// the union of the "1"-side classes. Weight is always (n-1)/2.
struct BinarySequence {
    SequenceParams params;
    std::vector<std::uint8_t> bits;

    /// ASCII serialization, index 0 first.
    std::string bit_string() const;
};

BinarySequence generate(const CyclotomicPartition& part);

std::uint64_t weight(const BinarySequence& seq);

/// Periodic autocorrelation A(tau) = sum_i (-1)^(s_{i+tau} + s_i).
std::int64_t autocorrelation(const BinarySequence& seq, std::uint64_t tau);

/// S(2) = sum s_i 2^i, exact. Bit i is the coefficient of 2^i (LSB first).
mpz_class s_of_2(const BinarySequence& seq);

/// Shortest LFSR length over GF(2) generating the periodic sequence,
/// synthesized from two concatenated periods.
std::uint64_t linear_complexity(const BinarySequence& seq);

/// Berlekamp-Massey over GF(2) on a raw bit stream.
std::uint64_t berlekamp_massey(std::span<const std::uint8_t> stream);

}  // namespace wgc
