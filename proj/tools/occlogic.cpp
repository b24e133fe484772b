// Command-line front end: load a formula base from a file and run the
// occurrence-level consistency analyses and entailment queries on it.
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "occlogic/analysis.hpp"
#include "occlogic/report.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct Options {
    std::string file;
    bool json = false;
    bool stats = false;
    std::string query;
    std::string relation = "classical";
    std::string queries_file;
    occlogic::Caps caps;
};

void add_cap_flags(CLI::App* cmd, occlogic::Caps& caps) {
    cmd->add_option("--bool-cap", caps.bool_vars,
                    "Max variables for Boolean model scans")
        ->envname("OCCLOGIC_BOOL_CAP");
    cmd->add_option("--lpm-cap", caps.lpm_vars,
                    "Max variables for three-valued model scans")
        ->envname("OCCLOGIC_LPM_CAP");
    cmd->add_option("--occ-cap", caps.occurrences,
                    "Max occurrence count for relation/o-model scans")
        ->envname("OCCLOGIC_OCC_CAP");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int run_analyze(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    occlogic::Analyzer a(occlogic::parse_base_file(opt.file), opt.caps);
    if (opt.json) {
        std::cout << occlogic::analyze_json(a, opt.stats).dump(2) << "\n";
        return kExitYes;
    }
    // Run every analysis first so the reported time covers the work; the
    // renderer then reads the warm caches.
    a.consistent();
    a.survey();
    a.omises();
    a.mises();
    a.duality();
    std::cout << occlogic::analyze_text(a, opt.stats, ms_since(t0));
    return kExitYes;
}

int run_entail(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    occlogic::Analyzer a(occlogic::parse_base_file(opt.file), opt.caps);
    auto rel = occlogic::relation_from_string(opt.relation);
    if (!rel) {
        std::cerr << "error: unknown relation '" << opt.relation << "'\n";
        return kExitInput;
    }
    occlogic::FormulaPtr query = occlogic::parse_formula(opt.query);
    occlogic::EntailWitness witness;
    bool verdict = a.entails(*rel, query, &witness);
    if (opt.json)
        std::cout << occlogic::entail_json(a, *rel, opt.query, verdict,
                                           witness)
                         .dump(2)
                  << "\n";
    else
        std::cout << occlogic::entail_text(a, *rel, opt.query, verdict,
                                           witness, ms_since(t0));
    return verdict ? kExitYes : kExitNo;
}

int run_duality(const Options& opt) {
    occlogic::Analyzer a(occlogic::parse_base_file(opt.file), opt.caps);
    std::cout << occlogic::duality_text(a);
    return a.duality().ok() ? kExitYes : kExitNo;
}

int run_compare(const Options& opt) {
    occlogic::Analyzer a(occlogic::parse_base_file(opt.file), opt.caps);
    std::ifstream in(opt.queries_file);
    if (!in) {
        std::cerr << "error: cannot open file: " << opt.queries_file << "\n";
        return kExitInput;
    }
    std::vector<std::pair<std::string, occlogic::FormulaPtr>> queries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        occlogic::FormulaPtr f = occlogic::parse_line(line, line_no);
        if (!f) continue;  // blank or comment
        queries.push_back({occlogic::to_string(f), f});
    }
    auto rows = occlogic::run_compare(a, queries);
    std::cout << occlogic::compare_text(rows);
    for (const auto& row : rows)
        if (!row.violations.empty()) return kExitNo;
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Occurrence-level inconsistency analysis for propositional bases"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* analyze =
        app.add_subcommand("analyze", "Full consistency analysis of a base");
    analyze->add_option("file", opt.file, "Base file, one formula per line")
        ->required();
    analyze->add_flag("--stats", opt.stats, "Append raw object counts");
    analyze->add_flag("--json", opt.json, "Machine-readable output");
    add_cap_flags(analyze, opt.caps);

    CLI::App* entail =
        app.add_subcommand("entail", "Query entailment under one relation");
    entail->add_option("file", opt.file, "Base file")->required();
    entail->add_option("-q,--query", opt.query, "Query formula")->required();
    entail
        ->add_option("-r,--relation", opt.relation,
                     "classical|m1|m2|mb1|mb2|a1|a2|b1|b2|lpm")
        ->required();
    entail->add_flag("--json", opt.json, "Machine-readable output");
    add_cap_flags(entail, opt.caps);

    CLI::App* duality = app.add_subcommand(
        "duality-check", "Verify the hitting-set correspondence on a base");
    duality->add_option("file", opt.file, "Base file")->required();
    add_cap_flags(duality, opt.caps);

    CLI::App* compare = app.add_subcommand(
        "compare", "Verdict table for queries under all relations");
    compare->add_option("file", opt.file, "Base file")->required();
    compare->add_option("--queries", opt.queries_file,
                        "File with one query per line")
        ->required();
    add_cap_flags(compare, opt.caps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(opt);
        if (app.got_subcommand(entail)) return run_entail(opt);
        if (app.got_subcommand(duality)) return run_duality(opt);
        if (app.got_subcommand(compare)) return run_compare(opt);
    } catch (const occlogic::CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const occlogic::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
