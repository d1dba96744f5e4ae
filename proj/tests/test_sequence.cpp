#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "wgcseq/sequence.hpp"

using namespace wgc;

namespace {

BinarySequence make_seq(std::uint64_t p, std::uint64_t q) {
    return generate(build_partition(make_params(p, q)));
}

// Minimal-recurrence oracle: smallest L such that some GF(2) recurrence of
// length L reproduces the periodic sequence. Solves the linear system by
// Gaussian elimination; independent of the Berlekamp-Massey path.
std::uint64_t min_recurrence_gf2(const std::vector<std::uint8_t>& period) {
    const std::size_t n = period.size();
    if (std::count(period.begin(), period.end(), 1) == 0) return 0;
    std::vector<std::uint8_t> s;
    for (int r = 0; r < 3; ++r) s.insert(s.end(), period.begin(), period.end());

    for (std::size_t len = 1; len <= n; ++len) {
        // Equations: s[i] = sum_j c_j s[i-j] for i = len .. len + n - 1.
        std::vector<std::vector<std::uint8_t>> rows;
        for (std::size_t i = len; i < len + n; ++i) {
            std::vector<std::uint8_t> row(len + 1);
            for (std::size_t j = 1; j <= len; ++j) row[j - 1] = s[i - j];
            row[len] = s[i];
            rows.push_back(std::move(row));
        }
        std::size_t rank_row = 0;
        for (std::size_t col = 0; col < len && rank_row < rows.size(); ++col) {
            std::size_t piv = rank_row;
            while (piv < rows.size() && !rows[piv][col]) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[rank_row]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank_row || !rows[r][col]) continue;
                for (std::size_t c = 0; c <= len; ++c) rows[r][c] ^= rows[rank_row][c];
            }
            ++rank_row;
        }
        const bool consistent = std::none_of(rows.begin(), rows.end(), [len](const auto& row) {
            return row[len] && std::none_of(row.begin(), row.begin() + len,
                                            [](std::uint8_t v) { return v != 0; });
        });
        if (consistent) return len;
    }
    return n;
}

}  // namespace

TEST_CASE("reference period of (5,3)") {
    const auto seq = make_seq(5, 3);
    CHECK(seq.bit_string() == "000000110111011");
    CHECK(weight(seq) == 7);
    CHECK(seq.bits[0] == 0);
}

TEST_CASE("weight is (n-1)/2") {
    CHECK(weight(make_seq(5, 7)) == 17);
    CHECK(weight(make_seq(13, 11)) == 71);
}

TEST_CASE("balance holds for every strict pair with period below 3000") {
    for (std::uint64_t p = 5; p * 3 < 3000; p += 4) {
        if (!is_prime(p)) continue;
        for (std::uint64_t q = 3; p * q < 3000; q += 4) {
            if (!is_prime(q) || q == p || std::gcd(p - 1, q - 1) != 2) continue;
            CAPTURE(p);
            CAPTURE(q);
            const auto seq = make_seq(p, q);
            CHECK(weight(seq) == (p * q - 1) / 2);
            CHECK(seq.bits[0] == 0);
        }
    }
}

TEST_CASE("support equals the one-side classes") {
    const auto part = build_partition(make_params(5, 7));
    const auto seq = generate(part);
    for (std::uint64_t i = 0; i < seq.bits.size(); ++i) {
        const auto lab = classify(i, part);
        const bool one = in_d1(lab) || lab == ClassLabel::D1pQ || lab == ClassLabel::D1qP;
        CHECK(seq.bits[i] == (one ? 1 : 0));
    }
}

TEST_CASE("autocorrelation") {
    const auto seq = make_seq(5, 3);
    const std::int64_t n = static_cast<std::int64_t>(seq.bits.size());
    CHECK(autocorrelation(seq, 0) == n);

    // Direct-summation oracle at tau = 1.
    std::int64_t direct = 0;
    for (std::uint64_t i = 0; i < seq.bits.size(); ++i) {
        const int s_i = seq.bits[i];
        const int s_j = seq.bits[(i + 1) % seq.bits.size()];
        direct += ((s_i ^ s_j) == 0) ? 1 : -1;
    }
    CHECK(autocorrelation(seq, 1) == direct);
    CHECK(autocorrelation(seq, 1) == 3);
    CHECK_THROWS_AS(autocorrelation(seq, 15), std::invalid_argument);
}

TEST_CASE("autocorrelation aggregates") {
    for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{5, 3}, {5, 7}}) {
        const auto seq = make_seq(p, q);
        const std::int64_t n = static_cast<std::int64_t>(seq.bits.size());
        std::int64_t total = 0;
        for (std::uint64_t tau = 0; tau < seq.bits.size(); ++tau) {
            const std::int64_t a = autocorrelation(seq, tau);
            CHECK(((a % 4) + 4) % 4 == ((n % 4) + 4) % 4);  // A(tau) = n (mod 4)
            total += a;
        }
        CHECK(total == 1);  // single extra zero: (sum (-1)^s_i)^2 = 1
    }
}

TEST_CASE("s_of_2") {
    CHECK(s_of_2(make_seq(5, 3)) == 28352);

    BinarySequence zero;
    zero.params = make_params(5, 3);
    zero.bits.assign(15, 0);
    CHECK(s_of_2(zero) == 0);

    for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{5, 3}, {5, 7}, {13, 11}}) {
        const auto seq = make_seq(p, q);
        const mpz_class v = s_of_2(seq);
        CHECK(v >= 0);
        CHECK(v <= (mpz_class(1) << seq.bits.size()) - 1);
        CHECK(v % 2 == seq.bits[0]);
    }
}

TEST_CASE("berlekamp-massey on trivial streams") {
    CHECK(berlekamp_massey(std::vector<std::uint8_t>{1, 1}) == 1);          // all-ones, period 1
    CHECK(berlekamp_massey(std::vector<std::uint8_t>{0, 1, 0, 1}) == 2);    // 0101...
    CHECK(berlekamp_massey(std::vector<std::uint8_t>{0, 0, 0, 0}) == 0);
}

TEST_CASE("sequence does not depend on the primitive root choice") {
    // D_0 is the unique index-2 subgroup whose reductions generate both
    // component groups, so every common primitive root yields the same
    // support even though the four-way unit sub-split moves.
    for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{5, 3}, {5, 7}, {13, 11}}) {
        const auto reference = make_seq(p, q);
        int roots_seen = 0;
        for (std::uint64_t g = 2; g < p * q; ++g) {
            SequenceParams params;
            try {
                params = make_params(p, q, true, g);
            } catch (const ParamError&) {
                continue;
            }
            ++roots_seen;
            CHECK(generate(build_partition(params)).bits == reference.bits);
        }
        CHECK(roots_seen >= 2);
    }
}

TEST_CASE("linear complexity matches the minimal-recurrence oracle") {
    const auto s53 = make_seq(5, 3);
    CHECK(linear_complexity(s53) == min_recurrence_gf2(s53.bits));
    CHECK(linear_complexity(s53) == 7);

    const auto s57 = make_seq(5, 7);
    CHECK(linear_complexity(s57) == min_recurrence_gf2(s57.bits));
    CHECK(linear_complexity(s57) == 8);

    const auto s3_13 = make_seq(13, 3);
    CHECK(linear_complexity(s3_13) == min_recurrence_gf2(s3_13.bits));
}
