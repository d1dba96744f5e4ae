#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "wgcseq/adic.hpp"

using namespace wgc;

namespace {

BinarySequence make_seq(std::uint64_t p, std::uint64_t q) {
    return generate(build_partition(make_params(p, q)));
}

std::vector<std::uint8_t> repeat_bits(const BinarySequence& seq, std::uint64_t total) {
    std::vector<std::uint8_t> out(total);
    for (std::uint64_t i = 0; i < total; ++i) out[i] = seq.bits[i % seq.bits.size()];
    return out;
}

// Exhaustive Phi-minimality oracle over odd denominators up to `n_cap`:
// every lattice point (m, n) with m = n*alpha (mod 2^T), |m| lifted
// symmetrically, is inspected.
RationalApprox min_phi_oracle(const std::vector<std::uint8_t>& prefix, std::uint64_t n_cap) {
    const std::size_t T = prefix.size();
    mpz_class alpha = 0;
    for (std::size_t i = 0; i < T; ++i)
        if (prefix[i]) mpz_setbit(alpha.get_mpz_t(), i);
    const mpz_class mod = mpz_class(1) << T;

    RationalApprox best{0, 0};
    mpz_class best_phi = -1;
    for (std::uint64_t n = 1; n <= n_cap; n += 2) {
        const mpz_class m_pos = (n * alpha) % mod;
        const mpz_class m_neg = m_pos - mod;
        for (const mpz_class& m : {m_pos, m_neg}) {
            const mpz_class phi = abs(m) > n ? abs(m) : mpz_class(n);
            if (best_phi < 0 || phi < best_phi) {
                best_phi = phi;
                best = RationalApprox{m, mpz_class(n)};
            }
        }
    }
    mpz_class g, am = abs(best.m);
    mpz_gcd(g.get_mpz_t(), am.get_mpz_t(), best.n.get_mpz_t());
    if (g > 1) {
        best.m /= g;
        best.n /= g;
    }
    return best;
}

}  // namespace

TEST_CASE("exact 2-adic complexity of the reference pairs") {
    const auto r53 = two_adic_complexity(make_seq(5, 3));
    CHECK(r53.phi2 == 15);
    CHECK(r53.lower_bound == 6);
    CHECK(r53.s2 == 28352);
    CHECK(r53.g == 1);
    CHECK(r53.is_maximal);
    CHECK(r53.meets_lower_bound);
    CHECK_FALSE(r53.degenerate);

    const auto r1743 = two_adic_complexity(make_seq(17, 43));
    CHECK(r1743.phi2 == 731);
    CHECK(r1743.lower_bound == 670);
}

TEST_CASE("periods outside the supported range are rejected") {
    BinarySequence empty;
    empty.params = make_params(5, 3);
    CHECK_THROWS_AS(two_adic_complexity(empty), std::invalid_argument);

    BinarySequence huge;
    huge.params = make_params(5, 3);
    huge.bits.assign(1ull << 20, 0);
    CHECK_THROWS_AS(two_adic_complexity(huge), std::invalid_argument);
}

TEST_CASE("all-zero input follows the defining formula and is flagged") {
    BinarySequence zero;
    zero.params = make_params(5, 3);
    zero.bits.assign(15, 0);
    const auto rep = two_adic_complexity(zero);
    CHECK(rep.g == (mpz_class(1) << 15) - 1);
    CHECK(rep.n == 1);
    CHECK(rep.m == 0);
    CHECK(rep.phi2 == 1);
    CHECK(rep.degenerate);
    CHECK_FALSE(rep.periodic_value_negative);
}

TEST_CASE("reduced fraction law") {
    for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{5, 3}, {5, 7}, {13, 11}, {17, 19}}) {
        const auto rep = two_adic_complexity(make_seq(p, q));
        CHECK(rep.m * rep.modulus == rep.n * rep.s2);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), rep.m.get_mpz_t(), rep.n.get_mpz_t());
        CHECK(g == 1);
        CHECK(rep.m >= 0);
        CHECK(rep.m <= rep.n);
        CHECK(rep.phi2 <= rep.params.n);
        CHECK((rep.phi2 == rep.params.n) == (rep.g == 1));
    }
}

TEST_CASE("lower bound verdict") {
    const auto applicable = lower_bound_verdict(two_adic_complexity(make_seq(13, 23)));
    CHECK(applicable.status == VerdictStatus::Applicable);
    CHECK(applicable.holds);  // 299 >= 262

    const auto r53 = lower_bound_verdict(two_adic_complexity(make_seq(5, 3)));
    CHECK(r53.status == VerdictStatus::Applicable);
    CHECK(r53.holds);  // 15 >= 6

    // |q - p| >= sqrt(pq) - 1 gates the verdict off.
    const auto gated = lower_bound_verdict(two_adic_complexity(make_seq(5, 19)));
    CHECK(gated.status == VerdictStatus::NotApplicable);
}

TEST_CASE("maximality verdict") {
    const auto r57 = two_adic_complexity(make_seq(5, 7));
    const auto v57 = maximality_verdict(r57);
    CHECK(v57.status == VerdictStatus::Applicable);
    CHECK(v57.holds);
    CHECK(r57.phi2 == 35);

    const auto v1719 = maximality_verdict(two_adic_complexity(make_seq(17, 19)));
    CHECK(v1719.status == VerdictStatus::Applicable);
    CHECK(v1719.holds);

    CHECK(maximality_verdict(two_adic_complexity(make_seq(5, 11))).status ==
          VerdictStatus::NotApplicable);
}

TEST_CASE("mersenne cofactor identity") {
    const auto c53 = mersenne_gcd_check(5, 3);
    CHECK(c53.p_side);
    CHECK(c53.q_side);
    const auto c35 = mersenne_gcd_check(3, 5);
    CHECK(c35.p_side);
    CHECK(c35.q_side);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
            if (p == q) continue;
            const auto c = mersenne_gcd_check(p, q);
            CHECK(c.p_side);
            CHECK(c.q_side);
        }
    }
    CHECK_THROWS_AS(mersenne_gcd_check(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(mersenne_gcd_check(4, 3), std::invalid_argument);
}

TEST_CASE("gcd divisibility check") {
    const auto seq = make_seq(5, 3);
    CHECK(gcd_divisibility_check(seq, mpz_class(1792)) == DivisibilityStatus::Holds);
    CHECK(gcd_divisibility_check(seq, (mpz_class(1) << 15) - 1) == DivisibilityStatus::Holds);
    CHECK(gcd_divisibility_check(seq, mpz_class(0)) == DivisibilityStatus::NotApplicable);
}

TEST_CASE("rational approximation on trivial prefixes") {
    CHECK_THROWS_AS(raa_synthesize(std::vector<std::uint8_t>{1}), std::invalid_argument);

    const auto zero = raa_synthesize(std::vector<std::uint8_t>(10, 0));
    CHECK(zero.m == 0);
    CHECK(zero.n == 1);

    std::vector<std::uint8_t> alt;
    for (int i = 0; i < 8; ++i) {
        alt.push_back(0);
        alt.push_back(1);
    }
    const auto r = raa_synthesize(alt);  // 2-adic value of 0101... is -2/3
    CHECK(r.m == -2);
    CHECK(r.n == 3);
}

TEST_CASE("rational approximation is lattice-minimal on two periods of (5,3)") {
    const auto seq = make_seq(5, 3);
    const auto prefix = repeat_bits(seq, 30);
    const auto r = raa_synthesize(prefix);

    // Output agrees with the prefix: m = n*alpha (mod 2^30), n odd.
    mpz_class alpha = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (prefix[i]) mpz_setbit(alpha.get_mpz_t(), i);
    mpz_class residue = (r.n * alpha - r.m) % (mpz_class(1) << 30);
    CHECK(residue == 0);
    CHECK(mpz_odd_p(r.n.get_mpz_t()));

    // At 30 bits the minimal approximation is strictly smaller than the
    // periodic fraction (-28352, 32767); the exhaustive oracle pins it.
    const auto oracle = min_phi_oracle(prefix, 1 << 15);
    CHECK(r.m == oracle.m);
    CHECK(r.n == oracle.n);
    CHECK(r.m == 9792);
    CHECK(r.n == 26555);
}

TEST_CASE("rational approximation converges to the periodic fraction") {
    const auto seq53 = make_seq(5, 3);
    // Three periods exceed the 2*bitlen+2 guarantee for (m*, n*) = (-28352, 32767).
    const auto r45 = raa_synthesize(repeat_bits(seq53, 45));
    CHECK(r45.m == -28352);
    CHECK(r45.n == 32767);

    const auto seq57 = make_seq(5, 7);
    const auto r70 = raa_synthesize(repeat_bits(seq57, 70));
    CHECK(r70.m == -s_of_2(seq57));
    CHECK(r70.n == (mpz_class(1) << 35) - 1);
}

TEST_CASE("recovered denominator length reproduces the 2-adic complexity") {
    for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{5, 3}, {5, 7}}) {
        const auto seq = make_seq(p, q);
        const auto rep = two_adic_complexity(seq);
        const auto r = raa_synthesize(repeat_bits(seq, 2 * p * q));
        const mpz_class largest = abs(r.m) > r.n ? abs(r.m) : r.n;
        CHECK(bit_length(largest) == rep.phi2);
    }
}
