#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coinv/report.hpp"
#include "coinv/verify.hpp"

using namespace coinv;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Options {
    u64 p = 0;
    std::string rep;
    unsigned dmax = 0;
    bool json = false;
    bool paper_names = false;
    std::string suite = "all";
};

void print_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
    for (const auto& c : checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << "  [" << c.cited << "]";
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
    }
}

int run_verify(const Options& o) {
    CaseCache cache;
    std::vector<CheckResult> checks;
    auto add = [&](std::vector<CheckResult> v) { checks.insert(checks.end(), v.begin(), v.end()); };
    const std::string& s = o.suite;
    if (s == "norm" || s == "all") add(suites::norm());
    if (s == "lemmas" || s == "all") add(suites::lemmas());
    if (s == "paper" || s == "all") {
        add(suites::groebner(cache));
        add(suites::series(cache));
        add(suites::top_degree(cache));
        add(suites::modules(cache));
        add(suites::transfers());
        add(suites::delta(cache));
        add(suites::degree_bound(cache));
        add(suites::certificates(cache));
    }
    if (o.json) {
        Report r;
        r.p = static_cast<u32>(o.p);
        r.checks = checks;
        std::cout << to_json(r).dump(2) << "\n";
    } else {
        print_checks(checks, std::cout);
        std::size_t passed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
        std::cout << passed << "/" << checks.size() << " checks passed\n";
    }
    return all_pass(checks) ? kPass : kFail;
}

int run_case(const std::string& cmd, const Options& o) {
    if (!o.p || o.rep.empty()) {
        std::cerr << "error: --p and --rep are required for '" << cmd << "'\n";
        return kUsage;
    }
    if (!is_prime(o.p)) {
        std::cerr << "error: p = " << o.p << " is not prime\n";
        return kUsage;
    }
    if (o.p >= (u64{1} << 32)) {
        std::cerr << "error: p must be below 2^32\n";
        return kUsage;
    }
    std::vector<unsigned> blocks;
    try {
        blocks = parse_rep_expr(o.rep);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    for (unsigned n : blocks)
        if (n > o.p) {
            std::cerr << "error: V_" << n << " does not exist for p = " << o.p << ": indecomposables are V_n with n <= p\n";
            return kUsage;
        }
    std::sort(blocks.begin(), blocks.end());
    NameScheme names = make_names(blocks, o.paper_names);
    RepSpec rep(o.p, blocks, names.ring);

    HilbertIdealOptions opt;
    opt.dmax = o.dmax;
    HilbertIdeal H = hilbert_ideal(rep, opt);

    Report r;
    r.p = rep.p();
    r.rep = blocks;
    for (const auto& g : H.gb.elements()) r.gb.push_back(g.to_string());
    r.hilbert_series = H.quotient.hilbert_series();
    r.top_degree = H.top_degree();
    std::vector<std::string> notes;
    bool ok = H.certified();
    notes.push_back(H.certified() ? "certificate: all invariants up to degree " + std::to_string(std::max(0, H.top_degree())) +
                                        " lie in the computed ideal"
                                  : "certificate: FAILED");

    if (cmd == "gb") {
        auto want = paper_gb(rep);
        if (!want) {
            notes.push_back("reference: not covered by the paper");
        } else {
            bool same = H.gb.elements() == *want;
            ok = ok && same;
            notes.push_back(same ? "reference: matches the published basis" : "reference: DIFFERS from the published basis");
        }
        r.checks.push_back({"degree-bound", "generated in degrees at most p", H.gb.max_degree() <= int(rep.p()), ""});
    } else if (cmd == "basis") {
        for (int d = 0; d <= H.top_degree(); ++d)
            for (const auto& m : H.quotient.degree(unsigned(d))) r.basis[unsigned(d)].push_back(monomial_to_string(m, names.coinv));
    } else if (cmd == "series") {
        auto want = expected_hilbert_series(rep);
        if (!want) {
            notes.push_back("reference: not covered by the paper");
        } else {
            bool same = r.hilbert_series == *want;
            ok = ok && same;
            notes.push_back(same ? "reference: matches the closed form" : "reference: DIFFERS from the closed form");
        }
    } else if (cmd == "decompose") {
        CoinvariantModule M(rep, H.gb);
        auto table = M.decompose();
        for (unsigned d = 0; d < table.size(); ++d) r.decomposition[d] = table[d];
        auto checks = check_decomposition(M);
        if (checks.empty()) {
            notes.push_back("reference: not covered by the paper");
        } else {
            for (auto& c : checks) {
                ok = ok && c.pass;
                r.checks.push_back(c);
            }
            std::size_t covered = 0;
            for (unsigned d = 0; d < table.size(); ++d)
                if ((blocks == std::vector<unsigned>{4} && expected_v4(rep.p(), d)) ||
                    (blocks == std::vector<unsigned>{5} && expected_v5(rep.p(), d)))
                    ++covered;
            if ((blocks == std::vector<unsigned>{4} || blocks == std::vector<unsigned>{5}) && covered < table.size())
                notes.push_back("reference: " + std::to_string(table.size() - covered) +
                                " degrees are not covered by the paper");
        }
    }

    if (o.json) {
        std::cout << to_json(r).dump(2) << "\n";
    } else if (cmd == "gb") {
        for (const auto& g : r.gb) std::cout << g << "\n";
    } else if (cmd == "basis") {
        for (const auto& [d, ms] : r.basis) {
            std::cout << d << ":";
            for (const auto& m : ms) std::cout << " " << m;
            std::cout << "\n";
        }
    } else if (cmd == "series") {
        std::cout << suites::series_string(r.hilbert_series) << "\n";
    } else if (cmd == "decompose") {
        for (const auto& [d, t] : r.decomposition) std::cout << d << ": " << jordan_type_to_string(t) << "\n";
    }
    if (!o.json) {
        for (const auto& n : notes) std::cerr << n << "\n";
        for (const auto& c : r.checks)
            if (!c.pass) std::cerr << "FAIL " << c.name << "  [" << c.cited << "]  (" << c.detail << ")\n";
    }
    return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert ideals and coinvariants of cyclic groups of prime order"};
    Options o;
    app.add_option("--p", o.p, "prime characteristic");
    app.add_option("--rep", o.rep, "representation, e.g. V4, 2V2+V3");
    app.add_option("--dmax", o.dmax, "generator degree bound (default p)");
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_flag("--paper-names", o.paper_names, "X_i/Y_i/Z_i names for sums of V2 and V3");
    app.require_subcommand(1);
    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the Hilbert ideal");
    auto* basis = app.add_subcommand("basis", "standard monomials of the coinvariants by degree");
    auto* series = app.add_subcommand("series", "Hilbert series coefficients");
    auto* decompose = app.add_subcommand("decompose", "Jordan type of each graded piece");
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("suite", o.suite, "norm | lemmas | paper | all")->check(CLI::IsMember({"norm", "lemmas", "paper", "all"}));
    for (auto* s : {gb, basis, series, decompose, verify}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }
    try {
        if (verify->parsed()) return run_verify(o);
        for (auto* s : {gb, basis, series, decompose})
            if (s->parsed()) return run_case(s->get_name(), o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
