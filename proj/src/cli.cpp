#include "wgcseq/cli.hpp"

#include <algorithm>
#include <complex>
#include <sstream>

#include <json.hpp>

#include "wgcseq/adic.hpp"
#include "wgcseq/circulant.hpp"
#include "wgcseq/cyclotomy.hpp"
#include "wgcseq/numtheory.hpp"
#include "wgcseq/sequence.hpp"
#include "wgcseq/spectra.hpp"

namespace wgc {

namespace {

using nlohmann::json;

json params_json(const SequenceParams& p) {
    return json{{"p", p.p},
                {"q", p.q},
                {"n", p.n},
                {"g", p.g},
                {"x", p.x},
                {"e", p.e},
                {"strict", p.strict},
                {"lower_bound_applicable", p.lower_bound_applicable},
                {"maximality_applicable", p.maximality_applicable}};
}

json verdict_json(const Verdict& v) {
    json j{{"applicable", v.status == VerdictStatus::Applicable}};
    if (v.status == VerdictStatus::Applicable) j["holds"] = v.holds;
    return j;
}

json complex_json(const std::complex<double>& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

std::string envelope(const json& params, const json& report, const json& verdicts) {
    const json top{{"params", params},
                   {"report", report},
                   {"verdicts", verdicts},
                   {"version", kVersion}};
    return top.dump(2) + "\n";
}

std::string error_output(const std::string& code, const std::string& message) {
    const json top{{"error", {{"code", code}, {"message", message}}}, {"version", kVersion}};
    return top.dump(2) + "\n";
}

bool verdict_fails(const Verdict& v) {
    return v.status == VerdictStatus::Applicable && !v.holds;
}

json adic_report_json(const AdicReport& rep) {
    return json{{"s2", rep.s2.get_str()},
                {"modulus", rep.modulus.get_str()},
                {"gcd", rep.g.get_str()},
                {"m", rep.m.get_str()},
                {"n", rep.n.get_str()},
                {"phi2", rep.phi2},
                {"lower_bound", rep.lower_bound},
                {"meets_lower_bound", rep.meets_lower_bound},
                {"is_maximal", rep.is_maximal},
                {"periodic_value_negative", rep.periodic_value_negative},
                {"degenerate", rep.degenerate}};
}

RunResult run_validate(const SequenceParams& params) {
    return {0, envelope(params_json(params), json{{"valid", true}}, json::object())};
}

RunResult run_generate(const RunConfig& cfg, const SequenceParams& params) {
    const auto part = build_partition(params);
    const auto seq = generate(part);
    if (cfg.format == OutputFormat::Raw) return {0, seq.bit_string() + "\n"};
    const json report{{"bits", seq.bit_string()}, {"weight", weight(seq)}};
    return {0, envelope(params_json(params), report, json::object())};
}

RunResult run_partition(const SequenceParams& params) {
    const auto part = build_partition(params);
    json classes = json::object();
    for (int k = 0; k < kClassCount; ++k) {
        const auto label = static_cast<ClassLabel>(k);
        classes[std::string(to_string(label))] = part.members_of(label);
    }
    return {0, envelope(params_json(params), json{{"classes", classes}}, json::object())};
}

RunResult run_analyze(const SequenceParams& params) {
    const auto part = build_partition(params);
    const auto seq = generate(part);
    const auto rep = two_adic_complexity(seq);
    const Verdict lower = lower_bound_verdict(rep);
    const Verdict maximal = maximality_verdict(rep);
    const json verdicts{{"lower_bound", verdict_json(lower)}, {"maximality", verdict_json(maximal)}};
    const int code = (verdict_fails(lower) || verdict_fails(maximal)) ? 1 : 0;
    return {code, envelope(params_json(params), adic_report_json(rep), verdicts)};
}

RunResult run_spectrum(const SequenceParams& params) {
    const auto part = build_partition(params);
    const auto seq = generate(part);
    const auto gp = gauss_periods(part);

    json class_values = json::object();
    for (int k = 0; k < kClassCount; ++k) {
        const auto label = static_cast<ClassLabel>(k);
        const auto& members = part.members_of(label);
        if (!members.empty())
            class_values[std::string(to_string(label))] =
                complex_json(spectrum_closed_form(members.front(), gp, part));
    }
    double max_residual = 0.0;
    for (std::uint64_t a = 0; a < params.n; ++a) {
        max_residual = std::max(
            max_residual, std::abs(spectrum_direct(a, seq) - spectrum_closed_form(a, gp, part)));
    }
    const auto identities = period_identities(gp);
    const auto combo = square_combination_check(gp);

    const bool ok = identities.all_ok() && combo.ok && max_residual < gp.tol;
    const json report{{"gauss_periods",
                       {{"eta0", complex_json(gp.eta0)},
                        {"eta1", complex_json(gp.eta1)},
                        {"delta0p", complex_json(gp.delta0p)},
                        {"delta1p", complex_json(gp.delta1p)},
                        {"delta0q", complex_json(gp.delta0q)},
                        {"delta1q", complex_json(gp.delta1q)}}},
                      {"class_values", class_values},
                      {"max_residual", max_residual},
                      {"tolerance", gp.tol},
                      {"identities",
                       {{"eta_ok", identities.eta_ok},
                        {"delta_p_ok", identities.delta_p_ok},
                        {"delta_q_ok", identities.delta_q_ok},
                        {"max_residual", identities.max_residual}}},
                      {"square_combination",
                       {{"ok", combo.ok},
                        {"sign", combo.sign},
                        {"residual", combo.residual},
                        {"value", complex_json(combo.value)}}}};
    const json verdicts{{"spectrum", {{"applicable", true}, {"holds", ok}}}};
    return {ok ? 0 : 1, envelope(params_json(params), report, verdicts)};
}

RunResult run_det(const SequenceParams& params) {
    const auto part = build_partition(params);
    const auto seq = generate(part);
    const auto cf = det_closed_form(params);
    const auto rep = match_closed_form(seq, cf);
    const auto divisibility = gcd_divisibility_check(seq, rep.det_exact);

    const bool ok = rep.matched_sign != MatchedSign::None &&
                    divisibility != DivisibilityStatus::Fails;
    const json report{{"det_exact", rep.det_exact.get_str()},
                      {"det_plus", rep.det_plus.get_str()},
                      {"det_minus", rep.det_minus.get_str()},
                      {"matched_sign", std::string(to_string(rep.matched_sign))},
                      {"hadamard_bound", rep.hadamard_bound.get_str()},
                      {"primes_used", rep.primes_used},
                      {"d", cf.d},
                      {"delta_plus", cf.delta_plus.get_str()},
                      {"delta_minus", cf.delta_minus.get_str()},
                      {"gcd_divisibility", divisibility == DivisibilityStatus::Holds  ? "holds"
                                           : divisibility == DivisibilityStatus::Fails ? "fails"
                                                                                       : "not-applicable"}};
    const json verdicts{{"determinant", {{"applicable", true}, {"holds", ok}}}};
    return {ok ? 0 : 1, envelope(params_json(params), report, verdicts)};
}

RunResult run_raa(const RunConfig& cfg, const SequenceParams& params) {
    const auto part = build_partition(params);
    const auto seq = generate(part);
    const auto rep = two_adic_complexity(seq);

    const std::uint64_t t_bits = cfg.prefix_bits == 0 ? 2 * params.n : cfg.prefix_bits;
    std::vector<std::uint8_t> prefix(t_bits);
    for (std::uint64_t i = 0; i < t_bits; ++i) prefix[i] = seq.bits[i % params.n];
    const auto approx = raa_synthesize(prefix);

    const std::uint64_t denom_bits = bit_length(approx.n);
    const bool agrees = denom_bits == rep.phi2;
    const json report{{"prefix_bits", t_bits},
                      {"m", approx.m.get_str()},
                      {"n", approx.n.get_str()},
                      {"denominator_bits", denom_bits},
                      {"phi2", rep.phi2},
                      {"agrees_with_analysis", agrees}};
    const json verdicts{{"raa", {{"applicable", true}, {"holds", agrees}}}};
    return {agrees ? 0 : 1, envelope(params_json(params), report, verdicts)};
}

RunResult run_table(const RunConfig& cfg) {
    const auto& pairs = cfg.pairs.empty() ? builtin_table_pairs() : cfg.pairs;
    struct Row {
        std::uint64_t p, q, phi2, lower_bound;
        bool maximal;
        std::string matched_sign;
        bool ok;
    };
    std::vector<Row> rows;
    rows.reserve(pairs.size());
    for (const auto& [p, q] : pairs) {
        const auto params = make_params(p, q, cfg.strict);
        const auto part = build_partition(params);
        const auto seq = generate(part);
        const auto rep = two_adic_complexity(seq);
        Row row{p, q, rep.phi2, rep.lower_bound, rep.is_maximal, "skipped", true};
        if (params.n <= cfg.det_max) {
            const auto match = match_closed_form(seq, det_closed_form(params));
            row.matched_sign = std::string(to_string(match.matched_sign));
            if (match.matched_sign == MatchedSign::None) row.ok = false;
        }
        if (verdict_fails(lower_bound_verdict(rep)) || verdict_fails(maximality_verdict(rep)))
            row.ok = false;
        rows.push_back(std::move(row));
    }
    const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.ok; });

    if (cfg.format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "p,q,phi2,lower_bound,maximal,matched_sign\n";
        for (const Row& r : rows) {
            out << r.p << ',' << r.q << ',' << r.phi2 << ',' << r.lower_bound << ','
                << (r.maximal ? "true" : "false") << ',' << r.matched_sign << '\n';
        }
        return {all_ok ? 0 : 1, out.str()};
    }
    json jrows = json::array();
    for (const Row& r : rows) {
        jrows.push_back(json{{"p", r.p},
                             {"q", r.q},
                             {"phi2", r.phi2},
                             {"lower_bound", r.lower_bound},
                             {"maximal", r.maximal},
                             {"matched_sign", r.matched_sign},
                             {"ok", r.ok}});
    }
    return {all_ok ? 0 : 1,
            envelope(json(nullptr), json{{"rows", jrows}}, json{{"table", {{"applicable", true}, {"holds", all_ok}}}})};
}

}  // namespace

const std::vector<std::pair<std::uint64_t, std::uint64_t>>& builtin_table_pairs() {
    static const std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs{
        {5, 3},   {5, 7},   {5, 11},  {13, 11}, {13, 23},
        {17, 11}, {17, 19}, {17, 23}, {17, 31}, {17, 43}};
    return pairs;
}

RunResult run(const RunConfig& config) {
    try {
        if (config.format == OutputFormat::Csv && config.command != Command::Table)
            throw ParamError("format-invalid", "csv output is only valid for the table command");
        if (config.format == OutputFormat::Raw && config.command != Command::Generate)
            throw ParamError("format-invalid", "raw output is only valid for the generate command");

        if (config.command == Command::Table) return run_table(config);

        const auto params = make_params(config.p, config.q, config.strict, config.g_override);
        switch (config.command) {
            case Command::Validate: return run_validate(params);
            case Command::Generate: return run_generate(config, params);
            case Command::Partition: return run_partition(params);
            case Command::Analyze: return run_analyze(params);
            case Command::Spectrum: return run_spectrum(params);
            case Command::Det: return run_det(params);
            case Command::Raa: return run_raa(config, params);
            case Command::Table: break;
        }
        throw std::logic_error("run: unhandled command");
    } catch (const ParamError& e) {
        return {2, error_output(e.code(), e.what())};
    } catch (const std::invalid_argument& e) {
        return {2, error_output("invalid-input", e.what())};
    } catch (const std::out_of_range& e) {
        return {2, error_output("invalid-input", e.what())};
    }
}

}  // namespace wgc
