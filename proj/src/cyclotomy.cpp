#include "wgcseq/cyclotomy.hpp"

#include <algorithm>
#include <stdexcept>

namespace wgc {

std::string_view to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::Zero: return "ZERO";
        case ClassLabel::D00: return "D00";
        case ClassLabel::D01: return "D01";
        case ClassLabel::D10: return "D10";
        case ClassLabel::D11: return "D11";
        case ClassLabel::D0pQ: return "D0p_q";
        case ClassLabel::D1pQ: return "D1p_q";
        case ClassLabel::D0qP: return "D0q_p";
        case ClassLabel::D1qP: return "D1q_p";
    }
    return "?";
}

CyclotomicPartition build_partition(const SequenceParams& params) {
    const std::uint64_t n = params.n, p = params.p, q = params.q, g = params.g, x = params.x;
    if (params.e % 2 != 0)
        throw ParamError("e-odd", "(p-1)(q-1)/2 must be even for the four-way unit split");

    CyclotomicPartition part;
    part.params = params;
    part.labels.assign(n, ClassLabel::Zero);
    std::vector<std::uint8_t> seen(n, 0);

    auto place = [&](std::uint64_t a, ClassLabel label) {
        if (seen[a]) throw std::logic_error("partition: residue labeled twice");
        seen[a] = 1;
        part.labels[a] = label;
        part.members[static_cast<std::size_t>(label)].push_back(a);
    };

    place(0, ClassLabel::Zero);

    // Unit classes: g^(2t) -> D00, g^(2t+1) -> D01, and the same times x
    // for D10/D11, t = 0 .. e/2 - 1.
    std::uint64_t pw = 1;  // g^(2t)
    const std::uint64_t g2 = mul_mod(g, g, n);
    for (std::uint64_t t = 0; t < params.e / 2; ++t) {
        const std::uint64_t odd = mul_mod(pw, g, n);
        place(pw, ClassLabel::D00);
        place(odd, ClassLabel::D01);
        place(mul_mod(pw, x, n), ClassLabel::D10);
        place(mul_mod(odd, x, n), ClassLabel::D11);
        pw = mul_mod(pw, g2, n);
    }

    // Quadratic classes mod p and mod q from the common root.
    part.residue_class_p.assign(p, -1);
    part.residue_class_q.assign(q, -1);
    std::uint64_t rp = 1;
    const std::uint64_t gp = g % p, gp2 = mul_mod(gp, gp, p);
    for (std::uint64_t t = 0; t < (p - 1) / 2; ++t) {
        part.residue_class_p[rp] = 0;
        part.residue_class_p[mul_mod(rp, gp, p)] = 1;
        rp = mul_mod(rp, gp2, p);
    }
    std::uint64_t rq = 1;
    const std::uint64_t gq = g % q, gq2 = mul_mod(gq, gq, q);
    for (std::uint64_t t = 0; t < (q - 1) / 2; ++t) {
        part.residue_class_q[rq] = 0;
        part.residue_class_q[mul_mod(rq, gq, q)] = 1;
        rq = mul_mod(rq, gq2, q);
    }

    // Multiples of q carry the class of their cofactor mod p; same for p.
    for (std::uint64_t r = 1; r < p; ++r)
        place(r * q, part.residue_class_p[r] == 0 ? ClassLabel::D0pQ : ClassLabel::D1pQ);
    for (std::uint64_t r = 1; r < q; ++r)
        place(r * p, part.residue_class_q[r] == 0 ? ClassLabel::D0qP : ClassLabel::D1qP);

    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::logic_error("partition: residue left unlabeled");
    for (auto& m : part.members) std::sort(m.begin(), m.end());
    return part;
}

ClassLabel classify(std::uint64_t a, const CyclotomicPartition& part) {
    if (a >= part.labels.size()) throw std::out_of_range("classify: residue out of range");
    return part.labels[a];
}

std::uint64_t cyclotomic_number(int i, int j, const CyclotomicPartition& part) {
    if ((i != 0 && i != 1) || (j != 0 && j != 1))
        throw std::invalid_argument("cyclotomic_number: indices must be 0 or 1");
    const std::uint64_t n = part.params.n;
    const ClassLabel src[2] = {i == 0 ? ClassLabel::D00 : ClassLabel::D10,
                               i == 0 ? ClassLabel::D01 : ClassLabel::D11};
    std::uint64_t count = 0;
    for (ClassLabel lab : src) {
        for (std::uint64_t a : part.members_of(lab)) {
            const ClassLabel t = part.labels[(a + 1) % n];
            const bool in_dj = (j == 0) ? (t == ClassLabel::D00 || t == ClassLabel::D01)
                                        : (t == ClassLabel::D10 || t == ClassLabel::D11);
            if (in_dj) ++count;
        }
    }
    return count;
}

}  // namespace wgc
