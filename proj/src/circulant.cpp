#include "wgcseq/circulant.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "wgcseq/numtheory.hpp"

namespace wgc {

mpz_class hadamard_bound(const BinarySequence& seq) {
    const std::uint64_t n = seq.bits.size();
    const std::uint64_t w = weight(seq);
    if (w == 0) return 1;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), w, n);  // (row norm^2)^N
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), pw.get_mpz_t());
    if (rem != 0) root += 1;
    return root;
}

std::vector<std::uint64_t> det_prime_moduli(const mpz_class& min_product, std::uint64_t below) {
    std::vector<std::uint64_t> primes;
    mpz_class product = 1;
    std::uint64_t candidate = (below % 2 == 0) ? below - 1 : below - 2;  // largest odd < below
    while (product <= min_product) {
        while (!is_prime(candidate)) candidate -= 2;
        primes.push_back(candidate);
        product *= mpz_class(static_cast<unsigned long>(candidate));
        candidate -= 2;
    }
    return primes;
}

namespace {

// Determinant of the circulant generated by `bits` modulo prime m.
std::uint64_t circulant_det_mod(const std::vector<std::uint8_t>& bits, std::uint64_t m) {
    const std::size_t n = bits.size();
    std::vector<std::uint64_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = bits[(i + n - j) % n];

    std::uint64_t det = 1;
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) return 0;  // singular residue
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j)
                std::swap(a[piv * n + j], a[col * n + j]);
            negate = !negate;
        }
        const std::uint64_t pivot = a[col * n + col];
        det = mul_mod(det, pivot, m);
        const std::uint64_t inv = pow_mod(pivot, m - 2, m);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::uint64_t f = mul_mod(a[r * n + col], inv, m);
            if (f == 0) continue;
            for (std::size_t j = col; j < n; ++j) {
                const std::uint64_t sub = mul_mod(f, a[col * n + j], m);
                std::uint64_t& cell = a[r * n + j];
                cell = (cell >= sub) ? cell - sub : cell + m - sub;
            }
        }
    }
    return negate ? (m - det) % m : det;
}

}  // namespace

mpz_class det_exact(const BinarySequence& seq, std::span<const std::uint64_t> primes) {
    const std::uint64_t n = seq.bits.size();
    if (n == 0 || n > kMaxDetPeriod)
        throw std::invalid_argument("det_exact: period exceeds the supported cap");

    const mpz_class bound = hadamard_bound(seq);
    mpz_class product = 1;
    for (std::uint64_t pr : primes) product *= mpz_class(static_cast<unsigned long>(pr));
    if (product <= 2 * bound)
        throw std::invalid_argument("det_exact: prime set too small for the Hadamard bound");

    std::vector<std::uint64_t> residues(primes.size());
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, primes.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= primes.size()) return;
            residues[k] = circulant_det_mod(seq.bits, primes[k]);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Deterministic sequential CRT fold, then a signed lift.
    mpz_class x = 0, modulus = 1;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const mpz_class pk(static_cast<unsigned long>(primes[k]));
        const mpz_class rk(static_cast<unsigned long>(residues[k]));
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pk.get_mpz_t()) == 0)
            throw std::logic_error("det_exact: prime moduli not coprime");
        mpz_class t = ((rk - x) * inv) % pk;
        if (t < 0) t += pk;
        x += modulus * t;
        modulus *= pk;
    }
    if (x > modulus / 2) x -= modulus;
    return x;
}

mpz_class det_exact(const BinarySequence& seq) {
    const mpz_class bound = hadamard_bound(seq);
    const auto primes = det_prime_moduli(2 * bound + 1);
    return det_exact(seq, primes);
}

std::string_view to_string(MatchedSign sign) {
    switch (sign) {
        case MatchedSign::Plus: return "plus";
        case MatchedSign::Minus: return "minus";
        case MatchedSign::None: return "none";
    }
    return "?";
}

DetReport match_closed_form(const BinarySequence& seq, const DetClosedForm& cf) {
    DetReport rep;
    rep.hadamard_bound = hadamard_bound(seq);
    const auto primes = det_prime_moduli(2 * rep.hadamard_bound + 1);
    rep.primes_used = static_cast<int>(primes.size());
    rep.det_exact = det_exact(seq, primes);
    rep.det_plus = cf.det_plus_int();
    rep.det_minus = cf.det_minus_int();
    if (rep.det_exact == rep.det_plus)
        rep.matched_sign = MatchedSign::Plus;
    else if (rep.det_exact == rep.det_minus)
        rep.matched_sign = MatchedSign::Minus;
    else
        rep.matched_sign = MatchedSign::None;
    return rep;
}

}  // namespace wgc
