#pragma once

#include <complex>
#include <cstdint>

#include <gmpxx.h>

#include "wgcseq/sequence.hpp"

namespace wgc {

/// Gauss periods at double precision: eta over the unit classes with an N-th
/// root of unity, delta over the two quadratic classes mod p (resp. mod q)
/// with a p-th (resp. q-th) root. tol = 1e-6 * sqrt(N).
struct GaussPeriods {
    SequenceParams params;
    std::complex<double> eta0, eta1;
    std::complex<double> delta0p, delta1p;
    std::complex<double> delta0q, delta1q;
    double tol = 0.0;
};

GaussPeriods gauss_periods(const CyclotomicPartition& part);

/// Closed-form spectrum value S(w_N^a) from the Gauss periods. The class
/// assignment is resolved per instance through the quadratic classes of
/// a mod p and a mod q, which absorbs the index conventions that depend on
/// the choice of g and on the quadratic character of p mod q.
std::complex<double> spectrum_closed_form(std::uint64_t a, const GaussPeriods& gp,
                                          const CyclotomicPartition& part);

/// S(w_N^a) = sum_i s_i exp(2*pi*i*a*i/N) by direct summation.
std::complex<double> spectrum_direct(std::uint64_t a, const BinarySequence& seq);

/// Residuals of the defining sum/product identities of the Gauss periods:
/// eta0 + eta1 = 1, eta0*eta1 = (1+pq)/4, delta sums = -1, and the delta
/// product (1-p)/4 or (1+p)/4 according to p mod 4 (same for q).
struct PeriodIdentityReport {
    bool eta_ok = false;
    bool delta_p_ok = false;
    bool delta_q_ok = false;
    double max_residual = 0.0;

    bool all_ok() const { return eta_ok && delta_p_ok && delta_q_ok; }
};

PeriodIdentityReport period_identities(const GaussPeriods& gp);

/// The squared-period combination
///   eta0^2 (d1p d1q + d0p d0q) + eta1^2 (d1p d0q + d0p d1q)
/// equals (1-pq)/4 + pq/2 or (1-pq)/4 - pq/2; sign records which branch
/// is realized (+1 or -1).
struct SquareCombinationReport {
    bool ok = false;
    int sign = 0;
    double residual = 0.0;
    std::complex<double> value;
};

SquareCombinationReport square_combination_check(const GaussPeriods& gp);

/// Exact closed-form circulant determinant candidates. With d = (q-p-2)/4:
///   delta(+-) = (1+pq)^2/16 + ((+-1 - d)/2) pq + d^2 + (3/2) d + 1/2
///   det(+-)   = ((pq-1)/2) ((1-p)/4)^((p-1)/2) ((1+q)/4)^((q-1)/2) delta^(e/2)
/// Both branches are exact rationals that reduce to integers.
struct DetClosedForm {
    SequenceParams params;
    std::int64_t d = 0;
    mpq_class delta_plus, delta_minus;
    mpq_class det_plus, det_minus;

    mpz_class det_plus_int() const;
    mpz_class det_minus_int() const;
};

/// Requires strict params (p = 1 mod 4, q = 3 mod 4); throws ParamError
/// ("strict-required") otherwise.
DetClosedForm det_closed_form(const SequenceParams& params);

}  // namespace wgc
