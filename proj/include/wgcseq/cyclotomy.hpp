#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "wgcseq/numtheory.hpp"

namespace wgc {

/// The nine classes partitioning Z_n: {0}, the four unit classes D00..D11,
/// and the multiples-of-q / multiples-of-p classes D_i^(p)q and D_i^(q)p.
enum class ClassLabel : std::uint8_t {
    Zero = 0,
    D00,
    D01,
    D10,
    D11,
    D0pQ,  // D_0^(p) q  (multiples of q)
    D1pQ,  // D_1^(p) q
    D0qP,  // D_0^(q) p  (multiples of p)
    D1qP,  // D_1^(q) p
};

inline constexpr int kClassCount = 9;

std::string_view to_string(ClassLabel label);

/// Full labeled partition of Z_n for one parameter set.
///
/// labels is a dense array of length n for O(1) classification.
/// residue_class_p[r] is the quadratic-class index (0 or 1) of r in the
/// two-class decomposition of Z_p^*, or -1 for r = 0; same for q.
struct CyclotomicPartition {
    SequenceParams params;
    std::vector<ClassLabel> labels;
    std::array<std::vector<std::uint64_t>, kClassCount> members;  // sorted
    std::vector<std::int8_t> residue_class_p;
    std::vector<std::int8_t> residue_class_q;

    const std::vector<std::uint64_t>& members_of(ClassLabel label) const {
        return members[static_cast<std::size_t>(label)];
    }
};

/// Build the partition from validated params. The unit classes come from the
/// parity of the exponent s in g^s x^i; the prime-side classes from g reduced
/// mod p and mod q.
CyclotomicPartition build_partition(const SequenceParams& params);

/// Label of residue a. Throws std::out_of_range for a >= n.
ClassLabel classify(std::uint64_t a, const CyclotomicPartition& part);

/// Cyclotomic number (i, j) = |(D_i + 1) and D_j| by direct enumeration.
std::uint64_t cyclotomic_number(int i, int j, const CyclotomicPartition& part);

/// True for the four unit-class labels whose members lie in D_1.
inline bool in_d1(ClassLabel label) {
    return label == ClassLabel::D10 || label == ClassLabel::D11;
}

}  // namespace wgc
