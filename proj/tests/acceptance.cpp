// Acceptance suite: one pass/fail line per criterion, exact integer
// arithmetic throughout (tolerance zero). Returns the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "dicelab/analysis.hpp"
#include "dicelab/compare.hpp"
#include "dicelab/die.hpp"
#include "dicelab/enumerate.hpp"
#include "oracles.hpp"

namespace {

using namespace dicelab;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f s", s);
    return buf;
}

// --- criterion 1: basic outcome identities on random pairs ----------------

bool criterion_prop_basic(std::string& detail) {
    Clock::time_point start = Clock::now();
    std::mt19937_64 rng(20240901);
    const int kPairs = 10000;
    for (int i = 0; i < kPairs; ++i) {
        Die a = testing::random_die(rng, 12, 50);
        Die b = testing::random_die(rng, 12, 50);
        ComparisonSummary fast = compare(a, b);
        ComparisonSummary slow = testing::naive_compare(a, b);
        ComparisonSummary mirror = compare(b, a);
        std::int64_t total = a.size() * b.size();
        if (fast != slow) {
            detail = "sweep disagrees with the naive oracle on " + to_string(a) + " vs " +
                     to_string(b);
            return false;
        }
        if (fast.pairs() != total || fast.eta != mirror.eta ||
            fast.delta() != -mirror.delta() || fast.gamma_ab < 0 || fast.gamma_ab > total ||
            fast.delta() < -total || fast.delta() > total) {
            detail = "outcome identities broken on " + to_string(a) + " vs " + to_string(b);
            return false;
        }
    }
    double elapsed = seconds_since(start);
    detail = std::to_string(kPairs) + " random pairs, sweep == naive, identities hold (" +
             format_seconds(elapsed) + ")";
    return elapsed < 5.0;
}

// --- criterion 2: the base die is unbeatable, n = 3..8 --------------------

bool criterion_base_unbeatable(std::string& detail) {
    Clock::time_point start = Clock::now();
    std::int64_t dice_checked = 0;
    for (std::int64_t n = 3; n <= 8; ++n) {
        BaseUnbeatableReport r = verify_base_unbeatable(n);
        dice_checked += r.class_size;
        if (!r.pass()) {
            detail = "counterexample at n=" + std::to_string(n) + ": " +
                     to_string(r.counterexamples.front());
            return false;
        }
    }
    double elapsed = seconds_since(start);
    detail = std::to_string(dice_checked) + " dice over n=3..8, 0 counterexamples (" +
             format_seconds(elapsed) + ")";
    return elapsed < 60.0;
}

// --- criterion 3: shifted run dice, n = 3..6, p = 0..3 --------------------

bool criterion_shifted(std::string& detail) {
    std::int64_t cases = 0;
    for (std::int64_t n = 3; n <= 6; ++n) {
        for (Face p = 0; p <= 3; ++p) {
            ShiftedUnbeatableReport r = verify_shifted_unbeatable(n, p);
            if (!r.counterexamples.empty()) {
                detail = "counterexample at n=" + std::to_string(n) + ", p=" +
                         std::to_string(p) + ": " + to_string(r.counterexamples.front());
                return false;
            }
            if (!r.bijection_ok) {
                detail = "shift bijection broken at n=" + std::to_string(n) + ", p=" +
                         std::to_string(p);
                return false;
            }
            ++cases;
        }
    }
    detail = std::to_string(cases) + " (n, p) cases, claim and bijection exact";
    return true;
}

// --- criterion 4: swap family, n = 3..7 ------------------------------------

bool criterion_swap_family(std::string& detail) {
    std::int64_t members = 0, steps = 0;
    for (std::int64_t n = 3; n <= 7; ++n) {
        SwapFamilyReport r = verify_swap_family(n);
        members += r.family_size;
        steps += r.total_steps;
        if (!r.all_tie_with_base || !r.paths_ok || !r.counterexamples.empty()) {
            detail = "failure at n=" + std::to_string(n);
            return false;
        }
    }
    detail = std::to_string(members) + " family members reached through X_n in " +
             std::to_string(steps) + " zero-delta steps";
    return true;
}

// --- criterion 5: the worst die, n = 3..8, sigma = 2..n(n+1)/2 -------------

bool criterion_worst(std::string& detail) {
    std::int64_t classes = 0;
    bool bound_attained = false;
    for (std::int64_t n = 3; n <= 8; ++n) {
        for (std::int64_t sigma = 2; sigma <= n * (n + 1) / 2; ++sigma) {
            WorstDieReport r = verify_worst(n, sigma);
            if (!r.pass()) {
                detail = "counterexample at n=" + std::to_string(n) + ", sigma=" +
                         std::to_string(sigma) + ": " + to_string(r.counterexamples.front());
                return false;
            }
            if (r.min_delta == r.bound) bound_attained = true;
            ++classes;
        }
    }
    if (!bound_attained) {
        detail = "bound n-2 never attained across the grid";
        return false;
    }
    if (delta(make_die({0, 1, 2}), make_die({0, 0, 3})) != 1) {
        detail = "expected the tight case delta((0,1,2),(0,0,3)) = 1";
        return false;
    }
    detail = std::to_string(classes) + " classes, every other die wins by at least n-2";
    return true;
}

// --- criterion 6: closed form vs direct, n = 3..7 --------------------------

bool criterion_closed_form(std::string& detail) {
    std::int64_t dice_checked = 0;
    for (std::int64_t n = 3; n <= 7; ++n) {
        StandardFormReport r = verify_standard_closed_form(n);
        dice_checked += r.class_size;
        if (!r.pass()) {
            detail = "mismatch at n=" + std::to_string(n) + ": " +
                     to_string(r.mismatches.front());
            return false;
        }
    }
    detail = std::to_string(dice_checked) + " dice over n=3..7, 0 discrepancies";
    return true;
}

// --- criterion 7: maximal advantage over the standard die, n = 3..8 --------

bool criterion_max_delta(std::string& detail) {
    const std::vector<std::int64_t> expected{1, 1, 2, 2, 3, 3};
    for (std::int64_t n = 3; n <= 8; ++n) {
        MaxDeltaReport r = max_delta_vs_standard(n);
        if (r.max_delta != expected[static_cast<std::size_t>(n - 3)] || !r.pass()) {
            detail = "max/shape failure at n=" + std::to_string(n) + " (max " +
                     std::to_string(r.max_delta) + ")";
            return false;
        }
        if (n % 2 == 1 &&
            !(r.maximizers.size() == 1 && r.maximizers.front() == *r.construction)) {
            detail = "odd-n maximizer not unique at n=" + std::to_string(n);
            return false;
        }
    }
    MaxDeltaReport r6 = max_delta_vs_standard(6);
    std::vector<Die> want{make_die({0, 0, 3, 6, 6, 6}), make_die({0, 0, 4, 5, 6, 6}),
                          make_die({0, 0, 5, 5, 5, 6})};
    if (r6.maximizers != want) {
        detail = "n=6 maximizer set differs from the expected three dice";
        return false;
    }
    detail = "max values 1,1,2,2,3,3 for n=3..8, extremal shapes as predicted";
    return true;
}

// --- criterion 8: non-transitivity in D_6(30) ------------------------------

bool criterion_cycles(std::string& detail) {
    TournamentReport report = tournament(ClassSpec{6, 30, std::nullopt, std::nullopt});
    if (report.cycles.empty()) {
        detail = "no 3-cycle found in D_6(30)";
        return false;
    }

    const Die a = make_die({1, 2, 5, 6, 7, 9});
    const Die b = make_die({1, 3, 4, 5, 8, 9});
    const Die c = make_die({2, 3, 4, 6, 7, 8});
    // Oracle confirmation of the classical triple's pairwise signs.
    if (!(testing::naive_delta(a, b) > 0 && testing::naive_delta(b, c) > 0 &&
          testing::naive_delta(c, a) > 0)) {
        detail = "oracle rejects the classical triple";
        return false;
    }
    // And the tournament matrix must agree that it forms a 3-cycle.
    auto index_of = [&](const Die& d) {
        auto it = std::lower_bound(report.dice.begin(), report.dice.end(), d);
        return static_cast<std::size_t>(it - report.dice.begin());
    };
    std::size_t ia = index_of(a), ib = index_of(b), ic = index_of(c);
    std::size_t size = report.dice.size();
    if (ia >= size || ib >= size || ic >= size || report.dice[ia] != a ||
        report.dice[ib] != b || report.dice[ic] != c) {
        detail = "classical dice missing from the enumerated class";
        return false;
    }
    if (!(report.delta.at(ia, ib) > 0 && report.delta.at(ib, ic) > 0 &&
          report.delta.at(ic, ia) > 0)) {
        detail = "matrix disagrees with the classical 3-cycle";
        return false;
    }
    detail = std::to_string(report.cycles.size()) +
             (report.cycles_truncated ? "+" : "") +
             " cycles found; classical triple confirmed by oracle and matrix";
    return true;
}

// --- criterion 9: counting equals streaming, n <= 7 ------------------------

bool criterion_counting(std::string& detail) {
    std::int64_t classes = 0;
    for (std::int64_t n = 1; n <= 7; ++n) {
        for (std::int64_t sigma = 0; sigma <= n * (n + 1) / 2; ++sigma) {
            ClassSpec spec{n, sigma, std::nullopt, std::nullopt};
            std::int64_t streamed = 0;
            for (ClassEnumerator e(spec); !e.done(); e.advance()) ++streamed;
            if (streamed != count_class(spec)) {
                detail = "count mismatch at n=" + std::to_string(n) + ", sigma=" +
                         std::to_string(sigma);
                return false;
            }
            ++classes;
        }
    }
    if (count_class(ClassSpec{3, 3, std::nullopt, std::nullopt}) != 3 ||
        count_class(ClassSpec{3, 6, std::nullopt, std::nullopt}) != 7) {
        detail = "expected |D_3(3)| = 3 and |D_3(6)| = 7";
        return false;
    }
    detail = std::to_string(classes) + " classes counted two ways, all equal";
    return true;
}

// --- criterion 10: CLI contract and golden stability -----------------------

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "dicelab_acceptance";
    fs::create_directories(dir);
    fs::path out = dir / ("out" + std::to_string(counter++) + ".txt");
    std::string command =
        std::string("\"") + DICELAB_CLI_PATH + "\" " + args + " > " + out.string() + " 2>/dev/null";
    int status = std::system(command.c_str());
    RunResult result;
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    std::ifstream in(out, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.out = buf.str();
    return result;
}

bool criterion_cli(std::string& detail) {
    RunResult verify = run_cli("verify --theorem max-delta --n 3..8 --format json");
    if (verify.exit_code != 0) {
        detail = "verify --theorem max-delta --n 3..8 exited with " +
                 std::to_string(verify.exit_code);
        return false;
    }
    const std::vector<std::string> golden{
        "compare 0,0,3 0,1,2 --format json",
        "enumerate --faces 3 --sum 3 --format json",
        "classify 0,0,3,6,6,6 --format json",
        "tournament --faces 6 --sum 21 --format json",
        "verify --theorem max-delta --n 3..8 --format json",
    };
    for (const std::string& args : golden) {
        RunResult first = run_cli(args);
        RunResult second = run_cli(args);
        if (first.exit_code != second.exit_code || first.out != second.out ||
            first.out.empty()) {
            detail = "output not byte-identical for: " + args;
            return false;
        }
    }
    detail = "verify exits 0; " + std::to_string(golden.size()) +
             " golden JSON outputs byte-identical across two runs";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "outcome identities + oracle equivalence (random suite)", criterion_prop_basic},
        {2, "base die unbeatable in D_n(n(n-1)/2), n=3..8", criterion_base_unbeatable},
        {3, "shifted run die unbeatable above min face, n=3..6, p=0..3", criterion_shifted},
        {4, "X_n all tie with the base die via swap paths, n=3..7", criterion_swap_family},
        {5, "single-heavy-face die is worst, n=3..8, full sigma grid", criterion_worst},
        {6, "closed-form delta vs standard equals direct, n=3..7", criterion_closed_form},
        {7, "max delta vs standard is floor((n-1)/2), n=3..8", criterion_max_delta},
        {8, "3-cycle (non-transitivity) present in D_6(30)", criterion_cycles},
        {9, "count_class equals streamed enumeration, n<=7", criterion_counting},
        {10, "CLI verify exits 0; golden JSON byte-stable", criterion_cli},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("[%2d] %s  %s%s%s\n", criterion.id, ok ? "PASS" : "FAIL", criterion.label,
                    detail.empty() ? "" : ": ", detail.c_str());
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
