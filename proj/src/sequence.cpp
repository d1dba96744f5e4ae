#include "wgcseq/sequence.hpp"

#include <algorithm>

namespace wgc {

std::string BinarySequence::bit_string() const {
    std::string s(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) s[i] = '1';
    return s;
}

BinarySequence generate(const CyclotomicPartition& part) {
    BinarySequence seq;
    seq.params = part.params;
    seq.bits.resize(part.labels.size());
    for (std::size_t i = 0; i < part.labels.size(); ++i) {
        const ClassLabel lab = part.labels[i];
        seq.bits[i] = (in_d1(lab) || lab == ClassLabel::D1pQ || lab == ClassLabel::D1qP) ? 1 : 0;
    }
    return seq;
}

std::uint64_t weight(const BinarySequence& seq) {
    return static_cast<std::uint64_t>(std::count(seq.bits.begin(), seq.bits.end(), 1));
}

std::int64_t autocorrelation(const BinarySequence& seq, std::uint64_t tau) {
    const std::uint64_t n = seq.bits.size();
    if (tau >= n) throw std::invalid_argument("autocorrelation: shift out of range");
    std::int64_t acc = 0;
    std::uint64_t j = tau;
    for (std::uint64_t i = 0; i < n; ++i) {
        acc += (seq.bits[i] == seq.bits[j]) ? 1 : -1;
        if (++j == n) j = 0;
    }
    return acc;
}

mpz_class s_of_2(const BinarySequence& seq) {
    mpz_class v = 0;
    for (std::size_t i = 0; i < seq.bits.size(); ++i)
        if (seq.bits[i]) mpz_setbit(v.get_mpz_t(), i);
    return v;
}

std::uint64_t berlekamp_massey(std::span<const std::uint8_t> stream) {
    const std::size_t n = stream.size();
    std::vector<std::uint8_t> c(n + 1, 0), b(n + 1, 0), t;
    c[0] = b[0] = 1;
    std::size_t len = 0;
    std::int64_t last = -1;  // position of the last length change
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t d = stream[i] & 1;
        for (std::size_t j = 1; j <= len; ++j) d ^= c[j] & stream[i - j];
        if (!d) continue;
        t = c;
        const std::size_t shift = static_cast<std::size_t>(static_cast<std::int64_t>(i) - last);
        for (std::size_t j = 0; j + shift <= n; ++j) c[j + shift] ^= b[j];
        if (2 * len <= i) {
            len = i + 1 - len;
            last = static_cast<std::int64_t>(i);
            b = std::move(t);
        }
    }
    return len;
}

std::uint64_t linear_complexity(const BinarySequence& seq) {
    std::vector<std::uint8_t> two_periods(seq.bits);
    two_periods.insert(two_periods.end(), seq.bits.begin(), seq.bits.end());
    return berlekamp_massey(two_periods);
}

}  // namespace wgc
