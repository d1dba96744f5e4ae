#include "wgcseq/spectra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wgc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> root_of_unity(std::uint64_t k, std::uint64_t n) {
    const double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

mpq_class mpq_pow(const mpq_class& base, std::uint64_t exp) {
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    r.canonicalize();
    return r;
}

// mpq arithmetic requires canonical operands; build every ratio through here.
mpq_class make_q(const mpz_class& num, const mpz_class& den) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

mpz_class integral_value(const mpq_class& v, const char* what) {
    if (v.get_den() != 1) throw std::logic_error(std::string(what) + ": not integral");
    return v.get_num();
}

}  // namespace

GaussPeriods gauss_periods(const CyclotomicPartition& part) {
    const auto& P = part.params;
    GaussPeriods gp;
    gp.params = P;
    gp.tol = 1e-6 * std::sqrt(static_cast<double>(P.n));

    auto class_sum = [&](ClassLabel lab) {
        std::complex<double> acc;
        for (std::uint64_t k : part.members_of(lab)) acc += root_of_unity(k, P.n);
        return acc;
    };
    gp.eta0 = class_sum(ClassLabel::D00) + class_sum(ClassLabel::D01);
    gp.eta1 = class_sum(ClassLabel::D10) + class_sum(ClassLabel::D11);

    gp.delta0p = gp.delta1p = {0.0, 0.0};
    for (std::uint64_t r = 1; r < P.p; ++r) {
        (part.residue_class_p[r] == 0 ? gp.delta0p : gp.delta1p) += root_of_unity(r, P.p);
    }
    gp.delta0q = gp.delta1q = {0.0, 0.0};
    for (std::uint64_t r = 1; r < P.q; ++r) {
        (part.residue_class_q[r] == 0 ? gp.delta0q : gp.delta1q) += root_of_unity(r, P.q);
    }
    return gp;
}

std::complex<double> spectrum_closed_form(std::uint64_t a, const GaussPeriods& gp,
                                          const CyclotomicPartition& part) {
    const auto& P = part.params;
    if (a >= P.n) throw std::out_of_range("spectrum_closed_form: residue out of range");
    if (a == 0) return {static_cast<double>((P.n - 1) / 2), 0.0};

    const std::complex<double> delta_p[2] = {gp.delta0p, gp.delta1p};
    const std::complex<double> delta_q[2] = {gp.delta0q, gp.delta1q};
    const std::int8_t up = part.residue_class_p[a % P.p];
    const std::int8_t uq = part.residue_class_q[a % P.q];

    // a multiple of p collapses to a q-side period and vice versa; a unit
    // takes the complementary eta plus both complementary deltas.
    if (a % P.p == 0) return delta_q[1 - uq];
    if (a % P.q == 0) return delta_p[1 - up];
    const bool is_d1 = in_d1(part.labels[a]);
    const std::complex<double> eta = is_d1 ? gp.eta0 : gp.eta1;
    return eta + delta_p[1 - up] + delta_q[1 - uq];
}

std::complex<double> spectrum_direct(std::uint64_t a, const BinarySequence& seq) {
    const std::uint64_t n = seq.bits.size();
    if (a >= n) throw std::out_of_range("spectrum_direct: residue out of range");
    std::complex<double> acc;
    std::uint64_t k = 0;  // (a * i) mod n, updated incrementally
    for (std::uint64_t i = 0; i < n; ++i) {
        if (seq.bits[i]) acc += root_of_unity(k, n);
        k += a;
        if (k >= n) k -= n;
    }
    return acc;
}

PeriodIdentityReport period_identities(const GaussPeriods& gp) {
    const auto& P = gp.params;
    PeriodIdentityReport rep;
    const double pq = static_cast<double>(P.n);

    auto track = [&rep](double r) {
        rep.max_residual = std::max(rep.max_residual, r);
        return r;
    };
    const double eta_res =
        std::max(track(std::abs(gp.eta0 + gp.eta1 - 1.0)),
                 track(std::abs(gp.eta0 * gp.eta1 - (1.0 + pq) / 4.0)));
    rep.eta_ok = eta_res < gp.tol;

    auto delta_ok = [&](std::complex<double> d0, std::complex<double> d1, std::uint64_t prime) {
        const double target = (prime % 4 == 1) ? (1.0 - static_cast<double>(prime)) / 4.0
                                               : (1.0 + static_cast<double>(prime)) / 4.0;
        const double res = std::max(track(std::abs(d0 + d1 + 1.0)),
                                    track(std::abs(d0 * d1 - target)));
        return res < gp.tol;
    };
    rep.delta_p_ok = delta_ok(gp.delta0p, gp.delta1p, P.p);
    rep.delta_q_ok = delta_ok(gp.delta0q, gp.delta1q, P.q);
    return rep;
}

SquareCombinationReport square_combination_check(const GaussPeriods& gp) {
    const double pq = static_cast<double>(gp.params.n);
    SquareCombinationReport rep;
    rep.value = gp.eta0 * gp.eta0 * (gp.delta1p * gp.delta1q + gp.delta0p * gp.delta0q) +
                gp.eta1 * gp.eta1 * (gp.delta1p * gp.delta0q + gp.delta0p * gp.delta1q);
    const double base = (1.0 - pq) / 4.0;
    const double res_plus = std::abs(rep.value - std::complex<double>(base + pq / 2.0));
    const double res_minus = std::abs(rep.value - std::complex<double>(base - pq / 2.0));
    if (res_plus <= res_minus) {
        rep.sign = +1;
        rep.residual = res_plus;
    } else {
        rep.sign = -1;
        rep.residual = res_minus;
    }
    rep.ok = rep.residual < gp.tol;
    return rep;
}

mpz_class DetClosedForm::det_plus_int() const { return integral_value(det_plus, "det_plus"); }
mpz_class DetClosedForm::det_minus_int() const { return integral_value(det_minus, "det_minus"); }

DetClosedForm det_closed_form(const SequenceParams& params) {
    if (params.p % 4 != 1 || params.q % 4 != 3)
        throw ParamError("strict-required",
                         "closed-form determinant requires p = 1 (mod 4), q = 3 (mod 4)");

    DetClosedForm cf;
    cf.params = params;
    const std::int64_t diff =
        static_cast<std::int64_t>(params.q) - static_cast<std::int64_t>(params.p) - 2;
    if (diff % 4 != 0)
        throw ParamError("strict-required", "(q - p - 2)/4 is not an integer");
    cf.d = diff / 4;

    const mpz_class pq(static_cast<unsigned long>(params.n));
    const mpz_class d(static_cast<long>(cf.d));
    const mpq_class common = make_q((1 + pq) * (1 + pq), 16) + make_q(d * d, 1) +
                             make_q(3 * d, 2) + make_q(1, 2);
    cf.delta_plus = common + make_q((1 - d) * pq, 2);
    cf.delta_minus = common + make_q((-1 - d) * pq, 2);

    const mpq_class prefactor =
        make_q(pq - 1, 2) *
        mpq_pow(make_q(1 - mpz_class(static_cast<unsigned long>(params.p)), 4), (params.p - 1) / 2) *
        mpq_pow(make_q(1 + mpz_class(static_cast<unsigned long>(params.q)), 4), (params.q - 1) / 2);
    cf.det_plus = prefactor * mpq_pow(cf.delta_plus, params.e / 2);
    cf.det_minus = prefactor * mpq_pow(cf.delta_minus, params.e / 2);

    // Force the integrality check now rather than at first use.
    (void)cf.det_plus_int();
    (void)cf.det_minus_int();
    return cf;
}

}  // namespace wgc
