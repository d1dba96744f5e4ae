#include "wgcseq/adic.hpp"

#include <array>
#include <stdexcept>

namespace wgc {

std::uint64_t bit_length(const mpz_class& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

AdicReport two_adic_complexity(const BinarySequence& seq) {
    const std::uint64_t n_period = seq.bits.size();
    if (n_period == 0 || n_period >= (1ull << 20))
        throw std::invalid_argument("two_adic_complexity: period out of range");

    AdicReport rep;
    rep.params = seq.params;
    rep.s2 = s_of_2(seq);
    rep.modulus = (mpz_class(1) << n_period) - 1;
    mpz_gcd(rep.g.get_mpz_t(), rep.s2.get_mpz_t(), rep.modulus.get_mpz_t());
    rep.m = rep.s2 / rep.g;
    rep.n = rep.modulus / rep.g;
    rep.phi2 = bit_length(rep.n + 1) - 1;  // floor(log2(n + 1))
    const auto& P = rep.params;
    rep.lower_bound = P.n - P.p - P.q - 1;
    rep.meets_lower_bound = rep.phi2 >= rep.lower_bound;
    rep.is_maximal = (rep.g == 1);
    rep.degenerate = (rep.s2 == 0);
    rep.periodic_value_negative = !rep.degenerate;
    return rep;
}

Verdict lower_bound_verdict(const AdicReport& report) {
    Verdict v;
    if (!report.params.strict || !report.params.lower_bound_applicable) return v;
    v.status = VerdictStatus::Applicable;
    v.holds = report.phi2 >= report.lower_bound;
    return v;
}

Verdict maximality_verdict(const AdicReport& report) {
    Verdict v;
    if (!report.params.strict || !report.params.maximality_applicable) return v;
    v.status = VerdictStatus::Applicable;
    v.holds = (report.phi2 == report.params.n);
    return v;
}

namespace {

bool mersenne_side_ok(std::uint64_t expo, std::uint64_t other) {
    const mpz_class m_side = (mpz_class(1) << expo) - 1;
    const mpz_class m_full = (mpz_class(1) << (expo * other)) - 1;
    const mpz_class cofactor = m_full / m_side;  // exact: expo | expo*other
    mpz_class lhs, rhs;
    mpz_gcd(lhs.get_mpz_t(), m_side.get_mpz_t(), cofactor.get_mpz_t());
    mpz_class other_z(static_cast<unsigned long>(other));
    mpz_gcd(rhs.get_mpz_t(), m_side.get_mpz_t(), other_z.get_mpz_t());
    bool ok = (lhs == rhs);
    if (expo > other && lhs != 1) ok = false;  // larger exponent side is coprime
    return ok;
}

}  // namespace

MersennePairCheck mersenne_gcd_check(std::uint64_t p, std::uint64_t q) {
    if (p == q || !is_prime(p) || !is_prime(q))
        throw std::invalid_argument("mersenne_gcd_check: arguments must be distinct primes");
    return MersennePairCheck{mersenne_side_ok(p, q), mersenne_side_ok(q, p)};
}

DivisibilityStatus gcd_divisibility_check(const BinarySequence& seq, const mpz_class& det) {
    if (det == 0) return DivisibilityStatus::NotApplicable;
    const std::uint64_t n_period = seq.bits.size();
    const mpz_class modulus = (mpz_class(1) << n_period) - 1;
    const mpz_class s2 = s_of_2(seq);
    mpz_class g_seq, g_det;
    mpz_gcd(g_seq.get_mpz_t(), s2.get_mpz_t(), modulus.get_mpz_t());
    mpz_gcd(g_det.get_mpz_t(), det.get_mpz_t(), modulus.get_mpz_t());
    return mpz_divisible_p(g_det.get_mpz_t(), g_seq.get_mpz_t()) ? DivisibilityStatus::Holds
                                                                 : DivisibilityStatus::Fails;
}

namespace {

struct Vec2 {
    mpz_class a, b;
};

mpz_class norm2(const Vec2& v) { return v.a * v.a + v.b * v.b; }

// Nearest integer to num/den for den > 0, ties rounded down.
mpz_class round_nearest(const mpz_class& num, const mpz_class& den) {
    mpz_class r, t = 2 * num + den, d = 2 * den;
    mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
    return r;
}

}  // namespace

RationalApprox raa_synthesize(std::span<const std::uint8_t> prefix) {
    const std::size_t t_bits = prefix.size();
    if (t_bits < 2) throw std::invalid_argument("raa_synthesize: need at least 2 prefix bits");

    mpz_class alpha = 0;
    for (std::size_t i = 0; i < t_bits; ++i)
        if (prefix[i] & 1) mpz_setbit(alpha.get_mpz_t(), i);
    if (alpha == 0) return RationalApprox{0, 1};

    // Lattice {(m, n) : m = n*alpha (mod 2^T)}, basis {(2^T, 0), (alpha, 1)},
    // reduced by the Gauss/Lagrange algorithm.
    Vec2 b1{mpz_class(1) << t_bits, 0};
    Vec2 b2{alpha, 1};
    for (;;) {
        if (norm2(b2) < norm2(b1)) std::swap(b1, b2);
        const mpz_class n1 = norm2(b1);
        const mpz_class mu = round_nearest(b1.a * b2.a + b1.b * b2.b, n1);
        if (mu == 0) break;
        b2.a -= mu * b1.a;
        b2.b -= mu * b1.b;
    }

    // Pick the smallest odd-denominator vector among short combinations.
    // At least one of b1, b2, b1 +- b2 has odd second coordinate because
    // (alpha, 1) lies in the lattice.
    const std::array<Vec2, 4> cands{
        Vec2{b1.a, b1.b},
        Vec2{b2.a, b2.b},
        Vec2{b1.a + b2.a, b1.b + b2.b},
        Vec2{b1.a - b2.a, b1.b - b2.b},
    };
    bool found = false;
    RationalApprox best;
    mpz_class best_phi;
    for (const Vec2& c : cands) {
        if (c.b == 0 || mpz_even_p(c.b.get_mpz_t())) continue;
        mpz_class m = c.a, n = c.b;
        if (n < 0) {
            m = -m;
            n = -n;
        }
        mpz_class g, am = abs(m);
        mpz_gcd(g.get_mpz_t(), am.get_mpz_t(), n.get_mpz_t());
        if (g > 1) {
            m /= g;
            n /= g;
        }
        const mpz_class phi = abs(m) > n ? abs(m) : n;
        if (!found || phi < best_phi || (phi == best_phi && n < best.n)) {
            found = true;
            best_phi = phi;
            best = RationalApprox{m, n};
        }
    }
    if (!found) throw std::logic_error("raa_synthesize: no odd-denominator solution");
    return best;
}

}  // namespace wgc
