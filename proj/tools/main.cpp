#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wgcseq/cli.hpp"

namespace {

wgc::OutputFormat parse_format(const std::string& s) {
    if (s == "json") return wgc::OutputFormat::Json;
    if (s == "csv") return wgc::OutputFormat::Csv;
    if (s == "raw") return wgc::OutputFormat::Raw;
    throw CLI::ValidationError("--format must be one of json, csv, raw");
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_pairs(const std::string& s) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--pairs expects p1:q1,p2:q2,...");
        pairs.emplace_back(std::stoull(item.substr(0, colon)), std::stoull(item.substr(colon + 1)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return pairs;
}

int emit(const wgc::RunResult& result, const std::optional<std::string>& path) {
    if (path) {
        std::ofstream out(*path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file " << *path << "\n";
            return 2;
        }
        out << result.output;
    } else {
        std::cout << result.output;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Balanced generalized cyclotomic sequences of period p*q: construction, "
        "exact 2-adic complexity, spectra, and circulant determinant verification"};
    app.require_subcommand(1);

    wgc::RunConfig cfg;
    std::string format = "json";
    std::string pairs;

    auto add_common = [&](CLI::App* sub, bool needs_pq) {
        if (needs_pq) {
            sub->add_option("--p", cfg.p, "first prime (1 mod 4 in strict mode)")->required();
            sub->add_option("--q", cfg.q, "second prime (3 mod 4 in strict mode)")->required();
            sub->add_option("--g", cfg.g_override, "common primitive root override");
        }
        sub->add_flag_callback("--no-strict", [&] { cfg.strict = false; },
                               "allow any pair with gcd(p-1, q-1) = 2");
        sub->add_option("--format", format, "output format: json, csv, raw")
            ->default_val("json");
        sub->add_option("--out", cfg.output_path, "write output to a file instead of stdout");
    };

    add_common(app.add_subcommand("validate", "validate (p, q) and print the derived parameters"), true);
    add_common(app.add_subcommand("generate", "emit one period of the sequence"), true);
    add_common(app.add_subcommand("partition", "dump the cyclotomic class partition"), true);
    add_common(app.add_subcommand("analyze", "exact 2-adic complexity report"), true);
    add_common(app.add_subcommand("spectrum", "Gauss periods and closed-form spectrum checks"), true);
    add_common(app.add_subcommand("det", "exact circulant determinant vs closed form"), true);
    auto* raa = app.add_subcommand("raa", "rational approximation from a sequence prefix");
    add_common(raa, true);
    raa->add_option("--prefix-bits", cfg.prefix_bits, "prefix length (default: two periods)");
    auto* table = app.add_subcommand("table", "reference table over the built-in pairs");
    add_common(table, false);
    table->add_option("--pairs", pairs, "custom pair list p1:q1,p2:q2,...");
    table->add_option("--det-max", cfg.det_max,
                      "verify the determinant closed form only for periods up to this value")
        ->default_val(200);

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.format = parse_format(format);
        if (!pairs.empty()) cfg.pairs = parse_pairs(pairs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "validate") cfg.command = wgc::Command::Validate;
    else if (name == "generate") cfg.command = wgc::Command::Generate;
    else if (name == "partition") cfg.command = wgc::Command::Partition;
    else if (name == "analyze") cfg.command = wgc::Command::Analyze;
    else if (name == "spectrum") cfg.command = wgc::Command::Spectrum;
    else if (name == "det") cfg.command = wgc::Command::Det;
    else if (name == "raa") cfg.command = wgc::Command::Raa;
    else cfg.command = wgc::Command::Table;

    return emit(wgc::run(cfg), cfg.output_path);
}
