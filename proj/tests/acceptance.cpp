// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "coinv/verify.hpp"

using namespace coinv;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<std::vector<CheckResult>()> run;
};

struct Outcome {
    std::vector<CheckResult> checks;
    double seconds = 0;
};

}  // namespace

int main() {
    CaseCache cache;
    std::vector<Criterion> cs = {
        {1, "norm expansion for V3", [] { return suites::norm(); }},
        {2, "subset and power-sum lemmas", [] { return suites::lemmas(); }},
        {3, "reduced Groebner bases", [&] { return suites::groebner(cache); }},
        {4, "Hilbert series closed forms", [&] { return suites::series(cache); }},
        {5, "top degrees", [&] { return suites::top_degree(cache); }},
        {6, "module decompositions", [&] { return suites::modules(cache); }},
        {7, "generator degree bound", [&] { return suites::degree_bound(cache); }},
        {8, "transfer vanishing", [] { return suites::transfers(); }},
        {9, "delta lemmas and weight filtration", [&] { return suites::delta(cache); }},
        {10, "saturation certificates", [&] { return suites::certificates(cache); }},
    };
    // 7 and 10 range over every computed case, so they run last.
    std::vector<Outcome> res(cs.size());
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const bool late = cs[i].id == 7 || cs[i].id == 10;
            if (late != (pass == 1)) continue;
            auto t0 = std::chrono::steady_clock::now();
            res[i].checks = cs[i].run();
            res[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }

    bool ok = true;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto& c = cs[i];
        const auto& o = res[i];
        std::size_t passed = 0;
        for (const auto& r : o.checks) passed += r.pass;
        const bool pass = !o.checks.empty() && passed == o.checks.size();
        ok = ok && pass;
        std::printf("criterion %2d %s  %s  (%zu/%zu checks, %.1f s)\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(), passed,
                    o.checks.size(), o.seconds);
        for (const auto& r : o.checks)
            if (!r.pass) std::printf("    FAIL %s  [%s]  %s\n", r.name.c_str(), r.cited.c_str(), r.detail.c_str());
    }
    return ok ? 0 : 1;
}
