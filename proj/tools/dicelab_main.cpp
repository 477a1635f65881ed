// dicelab: exact comparison and tournament analysis of fixed-sum dice.
//
// Subcommands: compare, enumerate, classify, tournament, verify.
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse error,
//             3 classifier precondition, 4 resource cap.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicelab/analysis.hpp"
#include "dicelab/compare.hpp"
#include "dicelab/die.hpp"
#include "dicelab/enumerate.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace dicelab;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResourceCap = 4;

enum class Format { Auto, Json, Csv, Lines, Table };

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "lines") return Format::Lines;
    if (name == "table") return Format::Table;
    return Format::Auto;
}

Format resolve(Format f) {
    if (f != Format::Auto) return f;
    return isatty(fileno(stdout)) ? Format::Table : Format::Json;
}

struct NRange {
    std::int64_t from = 0;
    std::int64_t to = 0;
};

// "3..8" or a single "5".
NRange parse_range(const std::string& text) {
    NRange r;
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.from = r.to = std::stoll(text);
        } else {
            r.from = std::stoll(text.substr(0, dots));
            r.to = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range \"" + text + "\", expected a..b");
    }
    if (r.from > r.to) throw std::invalid_argument("empty range \"" + text + "\"");
    return r;
}

json spec_to_json(const ClassSpec& spec) {
    json j;
    j["faces"] = spec.n;
    j["sum"] = spec.sigma;
    if (spec.min_face) j["min_face"] = *spec.min_face;
    if (spec.max_face) j["max_face"] = *spec.max_face;
    return j;
}

json odds_to_json(const WinOdds& odds) {
    return json{{"win", to_string(odds.win)},
                {"lose", to_string(odds.lose)},
                {"tie", to_string(odds.tie)}};
}

struct CompareArgs {
    std::string die_a, die_b;
    Format format = Format::Auto;
};

int run_compare(const CompareArgs& args) {
    Die a = parse_die(args.die_a);
    Die b = parse_die(args.die_b);
    ComparisonSummary s = compare(a, b);
    WinOdds odds = win_odds(a, b);

    if (resolve(args.format) == Format::Json) {
        json j;
        j["a"] = to_string(a);
        j["b"] = to_string(b);
        j["gamma_ab"] = s.gamma_ab;
        j["gamma_ba"] = s.gamma_ba;
        j["eta"] = s.eta;
        j["pairs"] = s.pairs();
        j["delta"] = s.delta();
        j["relation"] = to_string(s.relation());
        j["odds"] = odds_to_json(odds);
        std::cout << j.dump(2) << "\n";
    } else {
        const char* verdict = s.relation() == Relation::Beats  ? "a beats b"
                              : s.relation() == Relation::Loses ? "a loses to b"
                                                                : "a ties with b";
        std::cout << "a:        " << to_string(a) << "\n"
                  << "b:        " << to_string(b) << "\n"
                  << "gamma_ab: " << s.gamma_ab << "\n"
                  << "gamma_ba: " << s.gamma_ba << "\n"
                  << "eta:      " << s.eta << "\n"
                  << "delta:    " << s.delta() << "\n"
                  << "relation: " << verdict << "\n"
                  << "odds:     win " << to_string(odds.win) << ", lose "
                  << to_string(odds.lose) << ", tie " << to_string(odds.tie) << "\n";
    }
    return kExitOk;
}

struct EnumerateArgs {
    std::int64_t faces = 0;
    std::int64_t sum = 0;
    std::optional<std::int64_t> min_face, max_face, limit;
    bool count_only = false;
    Format format = Format::Auto;
};

int run_enumerate(const EnumerateArgs& args) {
    ClassSpec spec{args.faces, args.sum, args.min_face, args.max_face};
    spec.validate();
    Format format = resolve(args.format);

    if (args.count_only) {
        std::int64_t count = count_class(spec);
        if (format == Format::Json) {
            json j;
            j["spec"] = spec_to_json(spec);
            j["count"] = count;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << count << "\n";
        }
        return kExitOk;
    }

    bool truncated = false;
    std::vector<std::string> literals;
    std::int64_t seen = 0;
    for (ClassEnumerator e(spec); !e.done(); e.advance()) {
        if (args.limit && seen >= *args.limit) {
            truncated = true;
            break;
        }
        ++seen;
        literals.push_back(to_string(e.die()));
    }

    switch (format) {
        case Format::Json: {
            json j;
            j["spec"] = spec_to_json(spec);
            j["count"] = seen;
            j["truncated"] = truncated;
            j["dice"] = literals;
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            for (std::int64_t i = 1; i <= spec.n; ++i)
                std::cout << "f" << i << (i == spec.n ? "\n" : ",");
            for (const auto& lit : literals) std::cout << lit << "\n";
            break;
        }
        default:
            for (const auto& lit : literals) std::cout << lit << "\n";
            if (truncated && format == Format::Table)
                std::cout << "... (limit reached)\n";
            break;
    }
    return kExitOk;
}

struct ClassifyArgs {
    std::string die;
    Format format = Format::Auto;
};

int run_classify(const ClassifyArgs& args) {
    Die d = parse_die(args.die);
    StandardDecomposition parts = decompose_standard(d);
    std::int64_t diff = delta_vs_standard_closed_form(d);  // throws SumMismatchError
    Relation rel = relation_from_delta(diff);

    if (resolve(args.format) == Format::Json) {
        json j;
        j["die"] = to_string(d);
        j["n"] = parts.n;
        j["k"] = parts.k;
        j["l"] = parts.l;
        j["r"] = parts.r;
        j["mids"] = parts.mids;
        j["highs"] = parts.highs;
        j["delta_vs_standard"] = diff;
        j["relation"] = to_string(rel);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "die:      " << to_string(d) << "\n"
                  << "k/l/r:    " << parts.k << "/" << parts.l << "/" << parts.r << "\n"
                  << "delta:    " << diff << " vs " << to_string(standard_die(parts.n)) << "\n"
                  << "relation: " << to_string(rel) << " the standard die\n";
    }
    return kExitOk;
}

struct TournamentArgs {
    std::int64_t faces = 0;
    std::int64_t sum = 0;
    std::optional<std::int64_t> min_face, max_face;
    std::int64_t cap = TournamentOptions{}.class_cap;
    std::int64_t cycle_limit = TournamentOptions{}.cycle_limit;
    std::string dot_path;
    Format format = Format::Auto;
};

int run_tournament(const TournamentArgs& args) {
    ClassSpec spec{args.faces, args.sum, args.min_face, args.max_face};
    spec.validate();
    TournamentOptions opts;
    opts.class_cap = args.cap;
    opts.cycle_limit = args.cycle_limit;
    TournamentReport report = tournament(spec, opts);

    if (!args.dot_path.empty()) {
        std::ofstream dot(args.dot_path);
        if (!dot) throw std::invalid_argument("cannot write DOT file " + args.dot_path);
        write_dot(dot, report);
    }

    auto literals = [&](const std::vector<std::size_t>& indices) {
        std::vector<std::string> out;
        out.reserve(indices.size());
        for (std::size_t i : indices) out.push_back(to_string(report.dice[i]));
        return out;
    };
    constexpr std::size_t kCycleSample = 5;
    json sample = json::array();
    for (std::size_t i = 0; i < report.cycles.size() && i < kCycleSample; ++i) {
        const Cycle& c = report.cycles[i];
        sample.push_back(json::array({to_string(report.dice[c.a]), to_string(report.dice[c.b]),
                                      to_string(report.dice[c.c])}));
    }

    if (resolve(args.format) == Format::Json) {
        json j;
        j["spec"] = spec_to_json(spec);
        j["size"] = report.dice.size();
        j["undominated"] = literals(report.undominated);
        j["universal_ties"] = literals(report.universal_ties);
        j["worst"] = literals(report.worst);
        j["cycle_count"] = report.cycles.size();
        j["cycles_truncated"] = report.cycles_truncated;
        j["cycles_sample"] = sample;
        std::cout << j.dump(2) << "\n";
    } else {
        auto print_list = [&](const char* label, const std::vector<std::size_t>& indices) {
            std::cout << label << " (" << indices.size() << "):";
            for (std::size_t i : indices) std::cout << " " << to_string(report.dice[i]);
            std::cout << "\n";
        };
        std::cout << "class size: " << report.dice.size() << "\n";
        print_list("undominated", report.undominated);
        print_list("universal ties", report.universal_ties);
        print_list("worst", report.worst);
        std::cout << "3-cycles: " << report.cycles.size()
                  << (report.cycles_truncated ? "+ (limit reached)" : "") << "\n";
        for (const auto& triple : sample)
            std::cout << "  " << triple[0].get<std::string>() << " > "
                      << triple[1].get<std::string>() << " > " << triple[2].get<std::string>()
                      << " > " << triple[0].get<std::string>() << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string theorem;
    std::string range = "3..8";
    std::int64_t cap = TournamentOptions{}.class_cap;
    Format format = Format::Auto;
};

// First few offenders as literals, for diagnosable failures.
json counterexample_literals(const std::vector<Die>& dice) {
    json out = json::array();
    for (std::size_t i = 0; i < dice.size() && i < 5; ++i) out.push_back(to_string(dice[i]));
    return out;
}

int run_verify(const VerifyArgs& args) {
    NRange range = parse_range(args.range);
    TournamentOptions opts;
    opts.class_cap = args.cap;

    bool all_pass = true;
    json results = json::array();

    for (std::int64_t n = range.from; n <= range.to; ++n) {
        json entry;
        entry["n"] = n;
        bool pass = false;
        if (args.theorem == "base-unbeatable") {
            BaseUnbeatableReport r = verify_base_unbeatable(n, opts);
            pass = r.pass();
            entry["class_size"] = r.class_size;
            entry["ties"] = r.tie_count;
            entry["losses"] = r.loss_count;
            entry["counterexamples"] = r.counterexamples.size();
            if (!r.counterexamples.empty())
                entry["counterexample_dice"] = counterexample_literals(r.counterexamples);
        } else if (args.theorem == "shifted-unbeatable") {
            json cases = json::array();
            pass = true;
            for (Face p = 0; p <= 3; ++p) {
                ShiftedUnbeatableReport r = verify_shifted_unbeatable(n, p, opts);
                pass = pass && r.pass();
                json one{{"p", p},           {"class_size", r.class_size},
                         {"ties", r.tie_count}, {"losses", r.loss_count},
                         {"bijection_ok", r.bijection_ok}, {"pass", r.pass()}};
                if (!r.counterexamples.empty())
                    one["counterexample_dice"] = counterexample_literals(r.counterexamples);
                cases.push_back(one);
            }
            entry["cases"] = cases;
        } else if (args.theorem == "swap") {
            SwapFamilyReport r = verify_swap_family(n, opts);
            pass = r.pass();
            entry["family_size"] = r.family_size;
            entry["total_steps"] = r.total_steps;
            if (!r.counterexamples.empty())
                entry["counterexample_dice"] = counterexample_literals(r.counterexamples);
        } else if (args.theorem == "worst") {
            std::int64_t sigma_to = n * (n + 1) / 2;
            std::int64_t min_delta = std::numeric_limits<std::int64_t>::max();
            std::int64_t counterexamples = 0;
            std::vector<Die> offenders;
            pass = true;
            for (std::int64_t sigma = 2; sigma <= sigma_to; ++sigma) {
                WorstDieReport r = verify_worst(n, sigma, opts);
                pass = pass && r.pass();
                min_delta = std::min(min_delta, r.min_delta);
                counterexamples += static_cast<std::int64_t>(r.counterexamples.size());
                if (offenders.size() < 5)
                    offenders.insert(offenders.end(), r.counterexamples.begin(),
                                     r.counterexamples.end());
            }
            entry["sigma_from"] = 2;
            entry["sigma_to"] = sigma_to;
            entry["bound"] = n - 2;
            entry["min_delta"] = min_delta;
            entry["counterexamples"] = counterexamples;
            if (!offenders.empty())
                entry["counterexample_dice"] = counterexample_literals(offenders);
        } else if (args.theorem == "standard-delta") {
            StandardFormReport r = verify_standard_closed_form(n, opts);
            pass = r.pass();
            entry["class_size"] = r.class_size;
            entry["mismatches"] = r.mismatches.size();
            if (!r.mismatches.empty())
                entry["counterexample_dice"] = counterexample_literals(r.mismatches);
        } else if (args.theorem == "max-delta") {
            MaxDeltaReport r = max_delta_vs_standard(n, opts);
            pass = r.pass();
            entry["class_size"] = r.class_size;
            entry["max_delta"] = r.max_delta;
            entry["expected"] = r.expected;
            std::vector<std::string> lits;
            for (const Die& m : r.maximizers) lits.push_back(to_string(m));
            entry["maximizers"] = lits;
        } else {
            throw std::invalid_argument("unknown theorem \"" + args.theorem + "\"");
        }
        entry["pass"] = pass;
        results.push_back(entry);
        all_pass = all_pass && pass;
    }

    if (resolve(args.format) == Format::Json) {
        json j;
        j["theorem"] = args.theorem;
        j["n_from"] = range.from;
        j["n_to"] = range.to;
        j["pass"] = all_pass;
        j["results"] = results;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "theorem " << args.theorem << ", n in " << range.from << ".." << range.to
                  << "\n";
        for (const auto& entry : results) {
            std::cout << "  n=" << entry["n"].get<std::int64_t>() << ": "
                      << (entry["pass"].get<bool>() ? "pass" : "FAIL");
            if (args.theorem == "max-delta")
                std::cout << " (max_delta=" << entry["max_delta"].get<std::int64_t>() << ")";
            std::cout << "\n";
        }
        std::cout << (all_pass ? "all pass" : "FAILED") << "\n";
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dice comparison and fixed-sum tournament analysis"};
    app.require_subcommand(1);

    static const std::vector<std::string> kFormats{"auto", "json", "csv", "lines", "table"};
    std::string format_name = "auto";

    CompareArgs compare_args;
    CLI::App* cmd_compare =
        app.add_subcommand("compare", "compare two dice given as face literals");
    cmd_compare->add_option("a", compare_args.die_a, "first die, e.g. 0,0,3")->required();
    cmd_compare->add_option("b", compare_args.die_b, "second die")->required();
    cmd_compare->add_option("--format", format_name)->check(CLI::IsMember(kFormats));

    EnumerateArgs enum_args;
    CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list all dice of a class");
    cmd_enumerate->add_option("--faces", enum_args.faces, "face count n")->required();
    cmd_enumerate->add_option("--sum", enum_args.sum, "face sum sigma")->required();
    cmd_enumerate->add_option("--min-face", enum_args.min_face);
    cmd_enumerate->add_option("--max-face", enum_args.max_face);
    cmd_enumerate->add_option("--limit", enum_args.limit, "stop after this many dice");
    cmd_enumerate->add_flag("--count-only", enum_args.count_only,
                            "print the class size without enumerating");
    cmd_enumerate->add_option("--format", format_name)->check(CLI::IsMember(kFormats));

    ClassifyArgs classify_args;
    CLI::App* cmd_classify = app.add_subcommand(
        "classify", "k/l/r decomposition and closed-form relation vs the standard die");
    cmd_classify->add_option("die", classify_args.die, "die literal")->required();
    cmd_classify->add_option("--format", format_name)->check(CLI::IsMember(kFormats));

    TournamentArgs tournament_args;
    CLI::App* cmd_tournament =
        app.add_subcommand("tournament", "pairwise dominance analysis of a whole class");
    cmd_tournament->add_option("--faces", tournament_args.faces, "face count n")->required();
    cmd_tournament->add_option("--sum", tournament_args.sum, "face sum sigma")->required();
    cmd_tournament->add_option("--min-face", tournament_args.min_face);
    cmd_tournament->add_option("--max-face", tournament_args.max_face);
    cmd_tournament->add_option("--cap", tournament_args.cap, "refuse classes larger than this");
    cmd_tournament->add_option("--cycle-limit", tournament_args.cycle_limit,
                               "stop collecting 3-cycles after this many");
    cmd_tournament->add_option("--dot", tournament_args.dot_path,
                               "write the dominance digraph as DOT to this path");
    cmd_tournament->add_option("--format", format_name)->check(CLI::IsMember(kFormats));

    VerifyArgs verify_args;
    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "exhaustively verify a theorem over a range of face counts");
    cmd_verify
        ->add_option("--theorem", verify_args.theorem,
                     "one of base-unbeatable, shifted-unbeatable, swap, worst, "
                     "standard-delta, max-delta")
        ->required();
    cmd_verify->add_option("--n", verify_args.range, "face-count range a..b (default 3..8)");
    cmd_verify->add_option("--cap", verify_args.cap, "refuse classes larger than this");
    cmd_verify->add_option("--format", format_name)->check(CLI::IsMember(kFormats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Format format = parse_format(format_name);
    compare_args.format = format;
    enum_args.format = format;
    classify_args.format = format;
    tournament_args.format = format;
    verify_args.format = format;

    try {
        if (cmd_compare->parsed()) return run_compare(compare_args);
        if (cmd_enumerate->parsed()) return run_enumerate(enum_args);
        if (cmd_classify->parsed()) return run_classify(classify_args);
        if (cmd_tournament->parsed()) return run_tournament(tournament_args);
        if (cmd_verify->parsed()) return run_verify(verify_args);
    } catch (const ClassTooLargeError& e) {
        std::cerr << "error: " << e.what() << " (raise --cap to override)\n";
        return kExitResourceCap;
    } catch (const SumMismatchError& e) {
        std::cerr << "error: " << e.what()
                  << "\nhint: use `compare` against an explicit die instead\n";
        return kExitPrecondition;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
