#ifndef COINV_REPORT_HPP
#define COINV_REPORT_HPP

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "check.hpp"
#include "hilbert.hpp"
#include "modstruct.hpp"

namespace coinv {

// Parses "V4", "2V2+V3", "3V3" into summand sizes. Sizes are validated against p later.
inline std::vector<unsigned> parse_rep_expr(const std::string& text) {
    std::vector<unsigned> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&]() -> unsigned long {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) return 0;
        if (i - start > 6) throw std::invalid_argument("number too large in representation '" + text + "'");
        return std::stoul(text.substr(start, i - start));
    };
    while (true) {
        skip();
        unsigned long mult = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            mult = number();
            if (mult == 0) throw std::invalid_argument("multiplicity must be positive in '" + text + "'");
        }
        skip();
        if (i >= text.size() || (text[i] != 'V' && text[i] != 'v'))
            throw std::invalid_argument("expected 'V' at position " + std::to_string(i) + " in '" + text + "'");
        ++i;
        unsigned long n = number();
        if (n == 0) throw std::invalid_argument("expected a positive size after 'V' in '" + text + "'");
        if (mult > kMaxVars || mult * n > kMaxVars) throw std::invalid_argument("representation has too many variables");
        out.insert(out.end(), mult, static_cast<unsigned>(n));
        if (out.size() > kMaxVars) throw std::invalid_argument("representation has too many variables");
        skip();
        if (i == text.size()) break;
        if (text[i] != '+') throw std::invalid_argument("expected '+' at position " + std::to_string(i) + " in '" + text + "'");
        ++i;
    }
    return out;
}

// Variable names: `ring` for polynomials, `coinv` for classes in the coinvariants.
struct NameScheme {
    std::vector<std::string> ring, coinv;
};

inline NameScheme make_names(const std::vector<unsigned>& blocks, bool paper_names) {
    NameScheme s;
    const bool v23 = std::all_of(blocks.begin(), blocks.end(), [](unsigned n) { return n == 2 || n == 3; });
    if (paper_names && v23 && blocks.size() > 0) {
        const char* letters[] = {"X", "Y", "Z"};
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (unsigned j = 0; j < blocks[b]; ++j) {
                std::string n = std::string(letters[j]) + "_" + std::to_string(b + 1);
                s.ring.push_back(n);
                n[0] = static_cast<char>(std::tolower(n[0]));
                s.coinv.push_back(n);
            }
        return s;
    }
    unsigned v = 0;
    for (unsigned n : blocks)
        for (unsigned j = 0; j < n; ++j, ++v) {
            s.ring.push_back("X_" + std::to_string(v + 1));
            s.coinv.push_back("x_" + std::to_string(v + 1));
        }
    return s;
}

// Everything the command-line tool reports about one representation.
struct Report {
    u32 p = 0;
    std::vector<unsigned> rep;
    std::vector<std::string> gb;
    std::vector<u64> hilbert_series;
    int top_degree = -1;
    std::map<unsigned, JordanType> decomposition;
    std::map<unsigned, std::vector<std::string>> basis;
    std::vector<CheckResult> checks;
};

inline nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["p"] = r.p;
    j["rep"] = r.rep;
    j["gb"] = r.gb;
    j["hilbert_series"] = r.hilbert_series;
    j["top_degree"] = r.top_degree;
    nlohmann::json dec = nlohmann::json::object();
    for (const auto& [d, t] : r.decomposition) {
        nlohmann::json row = nlohmann::json::object();
        for (auto [k, m] : t) row[std::to_string(k)] = m;
        dec[std::to_string(d)] = row;
    }
    j["decomposition"] = dec;
    if (!r.basis.empty()) {
        nlohmann::json b = nlohmann::json::object();
        for (const auto& [d, ms] : r.basis) b[std::to_string(d)] = ms;
        j["basis"] = b;
    }
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"cited", c.cited}, {"pass", c.pass}});
    j["checks"] = checks;
    return j;
}

inline Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.p = j.at("p").get<u32>();
    r.rep = j.at("rep").get<std::vector<unsigned>>();
    r.gb = j.at("gb").get<std::vector<std::string>>();
    r.hilbert_series = j.at("hilbert_series").get<std::vector<u64>>();
    r.top_degree = j.at("top_degree").get<int>();
    for (const auto& [d, row] : j.at("decomposition").items()) {
        JordanType t;
        for (const auto& [k, m] : row.items()) t[static_cast<unsigned>(std::stoul(k))] = m.get<unsigned>();
        r.decomposition[static_cast<unsigned>(std::stoul(d))] = t;
    }
    if (j.contains("basis"))
        for (const auto& [d, ms] : j.at("basis").items())
            r.basis[static_cast<unsigned>(std::stoul(d))] = ms.get<std::vector<std::string>>();
    for (const auto& c : j.at("checks")) r.checks.push_back({c.at("name"), c.at("cited"), c.at("pass").get<bool>(), ""});
    return r;
}

inline bool same_report(const Report& a, const Report& b) {
    if (a.checks.size() != b.checks.size()) return false;
    for (std::size_t i = 0; i < a.checks.size(); ++i)
        if (a.checks[i].name != b.checks[i].name || a.checks[i].cited != b.checks[i].cited || a.checks[i].pass != b.checks[i].pass)
            return false;
    return a.p == b.p && a.rep == b.rep && a.gb == b.gb && a.hilbert_series == b.hilbert_series &&
           a.top_degree == b.top_degree && a.decomposition == b.decomposition && a.basis == b.basis;
}

}  // namespace coinv

#endif
