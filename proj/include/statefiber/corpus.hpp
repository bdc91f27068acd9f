#pragma once

#include "statefiber/corpus_data.hpp"
#include "statefiber/fiber.hpp"
#include "statefiber/jones.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace statefiber {

/// Standard diagram of the (2,n) torus link: the closure of a positive
/// 2-braid with n crossings.
inline std::string torus_2n_pd(int n) {
    if (n < 2)
        throw std::invalid_argument("torus_2n_pd: need n >= 2");
    auto wrap = [](int x, int lo, int hi) {
        int span = hi - lo + 1;
        return lo + ((x - lo) % span + span) % span;
    };
    std::string out;
    auto emit = [&](int a, int b, int c, int d) {
        if (!out.empty())
            out += " ";
        out += "X(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
               "," + std::to_string(d) + ")";
    };
    if (n % 2 == 1) {
        // one component, arcs 1..2n; the strand runs through the braid twice,
        // so the two visits to crossing i carry arcs i-1,i and n+i-1,n+i
        for (int i = 1; i <= n; ++i) {
            if (i % 2 == 1)
                emit(wrap(i - 1, 1, 2 * n), n + i, i, n + i - 1);
            else
                emit(n + i - 1, i, n + i, i - 1);
        }
    } else {
        // two components: arcs 1..n and n+1..2n, alternating under strands
        auto s1 = [&](int x) { return wrap(x, 1, n); };
        auto s2 = [&](int x) { return wrap(x, n + 1, 2 * n); };
        for (int i = 1; i <= n; ++i) {
            if (i % 2 == 1)
                emit(i, s2(n + i + 1), s1(i + 1), n + i);
            else
                emit(n + i, s1(i + 1), s2(n + i + 1), i);
        }
    }
    return out;
}

struct ExpectedValue {
    std::string value;
    std::string tag;  // "derived", "trivial", or "paper"
};

struct Fixture {
    std::string name;
    std::string pd;
    std::map<std::string, ExpectedValue> expected;
};

namespace detail {

inline std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

inline std::vector<Fixture> parse_corpus(const std::string& text) {
    std::vector<Fixture> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = detail::trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        size_t p1 = line.find('|');
        size_t p2 = p1 == std::string::npos ? std::string::npos : line.find('|', p1 + 1);
        if (p2 == std::string::npos)
            throw ParseError("corrupted corpus line: " + line);
        Fixture f;
        f.name = detail::trim(line.substr(0, p1));
        f.pd = detail::trim(line.substr(p1 + 1, p2 - p1 - 1));
        std::istringstream rest(line.substr(p2 + 1));
        std::string token;
        while (rest >> token) {
            size_t eq = token.find('=');
            size_t hash = token.rfind('#');
            if (eq == std::string::npos || hash == std::string::npos || hash < eq)
                throw ParseError("corrupted corpus entry '" + token + "' in fixture " + f.name);
            ExpectedValue v;
            v.value = token.substr(eq + 1, hash - eq - 1);
            v.tag = token.substr(hash + 1);
            if (v.tag != "derived" && v.tag != "trivial" && v.tag != "paper")
                throw ParseError("unknown provenance tag '" + v.tag + "' in fixture " + f.name);
            f.expected.emplace(token.substr(0, eq), std::move(v));
        }
        out.push_back(std::move(f));
    }
    return out;
}

inline std::vector<Fixture> load_corpus() { return parse_corpus(kCorpusText); }

/// Compact Jones serialization usable as a whitespace-free corpus value.
inline std::string jones_to_compact_string(const LaurentPoly& jones_half_units) {
    if (jones_half_units.is_zero())
        return "0";
    std::string out;
    for (const auto& [e, c] : jones_half_units.terms()) {
        std::string coeff = c.str();
        if (!out.empty() && coeff[0] != '-')
            out += "+";
        out += coeff + "*t^(" + std::to_string(e) + "/2)";
    }
    return out;
}

/// Every checkable key for one diagram, as strings.
inline std::map<std::string, std::string> compute_fixture_values(const LinkDiagram& d,
                                                                 int cap = 20) {
    std::map<std::string, std::string> v;
    auto yn = [](bool b) { return b ? std::string("true") : std::string("false"); };
    v["crossings"] = std::to_string(d.crossing_count());
    v["free_loops"] = std::to_string(d.free_loops);
    v["pieces"] = std::to_string(d.piece_count());
    v["connected"] = yn(d.is_connected());
    v["alternating"] = yn(d.is_alternating());
    v["components"] = std::to_string(d.orientation().component_count + 0);
    v["writhe"] = std::to_string(d.writhe());
    if (d.is_connected() && d.crossing_count() > 0)
        v["prime"] = yn(d.is_prime());

    const std::pair<std::string, KauffmanState> states[] = {
        {"allA", all_a_state(d)}, {"allB", all_b_state(d)}, {"seifert", seifert_state(d)}};
    for (const auto& [prefix, sigma] : states) {
        auto g = state_graph(d, sigma);
        auto reduced = reduce(g);
        v[prefix + "_circles"] = std::to_string(resolve(d, sigma).count);
        v[prefix + "_adequate"] = yn(is_adequate(d, sigma));
        if (d.is_connected())
            v[prefix + "_homogeneous"] = yn(is_homogeneous(d, sigma));
        v[prefix + "_tree"] = yn(is_tree(reduced));
        v[prefix + "_fiber"] = detect_fiber(d, sigma).to_string();
        v[prefix + "_chi_surface"] = std::to_string(euler_characteristic_of_surface(d, sigma));
    }
    v["seifert_label"] = seifert_state(d).to_string();
    v["chiA"] = std::to_string(reduce(state_graph(d, all_a_state(d))).euler_characteristic());
    v["chiB"] = std::to_string(reduce(state_graph(d, all_b_state(d))).euler_characteristic());

    JonesReport jr = jones_report(d, cap);
    v["jones"] = jones_to_compact_string(jr.polynomial);
    v["alpha"] = jr.alpha.str();
    v["beta"] = jr.beta.str();
    v["beta_prime"] = jr.beta_prime.str();
    v["alpha_prime"] = jr.alpha_prime.str();
    v["k_half"] = std::to_string(jr.k_half);
    v["m_half"] = std::to_string(jr.m_half);
    return v;
}

struct Mismatch {
    std::string fixture;
    std::string key;
    std::string expected;
    std::string computed;
};

struct SweepReport {
    int fixtures_run = 0;
    int checks = 0;
    std::vector<Mismatch> mismatches;

    bool all_passed() const { return mismatches.empty(); }
};

/// Compare every expectation of every fixture against freshly computed values.
inline SweepReport run_sweep(const std::vector<Fixture>& fixtures, int cap = 20) {
    SweepReport report;
    for (const auto& f : fixtures) {
        ++report.fixtures_run;
        std::map<std::string, std::string> computed;
        try {
            computed = compute_fixture_values(parse_pd(f.pd), cap);
        } catch (const std::exception& e) {
            report.mismatches.push_back({f.name, "<analysis>", "<no error>", e.what()});
            continue;
        }
        for (const auto& [key, exp] : f.expected) {
            ++report.checks;
            auto it = computed.find(key);
            std::string got = it == computed.end() ? "<missing>" : it->second;
            if (got != exp.value)
                report.mismatches.push_back({f.name, key, exp.value, got});
        }
    }
    return report;
}

/// Regenerate one corpus line with freshly computed values. Provenance tags
/// follow fixed rules: structural counts are trivial, the fiber verdicts the
/// torus-link and unknot rows carry the positive-braid/disk facts, the rest
/// is oracle-derived.
inline std::string fixture_line(const std::string& name, const std::string& pd, int cap = 20) {
    auto values = compute_fixture_values(parse_pd(pd), cap);
    bool paper_fiber = name.rfind("torus_2_", 0) == 0 || name == "unknot0" ||
                       name == "hopf" || name == "trefoil" || name == "knot_5_1";
    std::string line = name + " | " + pd + " |";
    for (const auto& [key, value] : values) {
        std::string tag = "derived";
        if (key == "crossings" || key == "free_loops" || key == "pieces" ||
            key == "connected" || key == "components")
            tag = "trivial";
        else if (key == "allA_fiber" && paper_fiber)
            tag = "paper";
        line += " " + key + "=" + value + "#" + tag;
    }
    return line;
}

}  // namespace statefiber
