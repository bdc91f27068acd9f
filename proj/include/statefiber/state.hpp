#pragma once

#include "statefiber/diagram.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace statefiber {

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Resolution : std::uint8_t { A, B };

inline char resolution_char(Resolution r) { return r == Resolution::A ? 'A' : 'B'; }

/// A Kauffman state: one A/B choice per crossing, indexed in crossing order.
struct KauffmanState {
    std::vector<Resolution> choice;

    int size() const { return static_cast<int>(choice.size()); }

    std::string to_string() const {
        std::string s;
        for (Resolution r : choice)
            s += resolution_char(r);
        return s;
    }
};

inline KauffmanState all_a_state(const LinkDiagram& d) {
    return {std::vector<Resolution>(d.crossing_count(), Resolution::A)};
}

inline KauffmanState all_b_state(const LinkDiagram& d) {
    return {std::vector<Resolution>(d.crossing_count(), Resolution::B)};
}

/// The orientation-respecting smoothing: A at positive crossings, B at
/// negative ones.
inline KauffmanState seifert_state(const LinkDiagram& d) {
    KauffmanState s;
    s.choice.reserve(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c)
        s.choice.push_back(d.crossing_sign(c) > 0 ? Resolution::A : Resolution::B);
    return s;
}

/// Parse a state selector: "all-a", "all-b", "seifert", or a literal like
/// "AABA" in crossing order.
inline KauffmanState parse_state(const LinkDiagram& d, const std::string& selector) {
    if (selector == "all-a")
        return all_a_state(d);
    if (selector == "all-b")
        return all_b_state(d);
    if (selector == "seifert")
        return seifert_state(d);
    if (static_cast<int>(selector.size()) != d.crossing_count())
        throw std::invalid_argument("state literal '" + selector + "' has length " +
                                    std::to_string(selector.size()) + ", diagram has " +
                                    std::to_string(d.crossing_count()) + " crossings");
    KauffmanState s;
    for (char ch : selector) {
        if (ch == 'A' || ch == 'a')
            s.choice.push_back(Resolution::A);
        else if (ch == 'B' || ch == 'b')
            s.choice.push_back(Resolution::B);
        else
            throw std::invalid_argument(std::string("state literal contains '") + ch + "'");
    }
    return s;
}

/// State circles of a resolution. Circle ids are 0..count-1; arcs of free
/// loops have no entry (each free loop is its own circle, ids at the end).
struct StateCircles {
    std::vector<int> circle_of_arc;  // arc id -> circle id (index 0 unused)
    int count = 0;
    int free_loop_circles = 0;
};

/// The two arc pairs joined by a smoothing: A pairs (a,b),(c,d); B pairs
/// (a,d),(b,c).
inline std::array<std::pair<int, int>, 2> smoothing_pairs(const Crossing& c, Resolution r) {
    const auto& s = c.slots;
    if (r == Resolution::A)
        return {{{s[0], s[1]}, {s[2], s[3]}}};
    return {{{s[0], s[3]}, {s[1], s[2]}}};
}

inline StateCircles resolve(const LinkDiagram& d, const KauffmanState& sigma) {
    if (sigma.size() != d.crossing_count())
        throw std::invalid_argument("state size does not match diagram");
    const int m = d.arc_count();
    detail::DisjointSet ds(m > 0 ? m : 1);
    for (int c = 0; c < d.crossing_count(); ++c)
        for (const auto& [x, y] : smoothing_pairs(d.crossings[c], sigma.choice[c]))
            ds.unite(x - 1, y - 1);
    StateCircles out;
    out.circle_of_arc.assign(m + 1, -1);
    std::map<int, int> id_of_root;  // keyed by smallest arc in class
    for (int a = 1; a <= m; ++a) {
        int r = ds.find(a - 1);
        auto it = id_of_root.find(r);
        if (it == id_of_root.end())
            it = id_of_root.emplace(r, static_cast<int>(id_of_root.size())).first;
        out.circle_of_arc[a] = it->second;
    }
    out.free_loop_circles = d.free_loops;
    out.count = static_cast<int>(id_of_root.size()) + d.free_loops;
    return out;
}

/// chi(S_sigma) = #circles - #crossings (disks minus bands).
inline int euler_characteristic_of_surface(const LinkDiagram& d, const KauffmanState& sigma) {
    return resolve(d, sigma).count - d.crossing_count();
}

/// Crossing -> region partition of the state-circle complement.
struct RegionAssignment {
    std::vector<int> region_of_crossing;
    int region_count = 0;
};

/// Merge the diagram faces across each smoothing: an A-crossing merges its
/// bc and da quadrant faces, a B-crossing its ab and cd faces. The crossing
/// lands in the merged class.
inline RegionAssignment regions(const LinkDiagram& d, const KauffmanState& sigma) {
    if (!d.is_connected())
        throw std::logic_error("regions: diagram is not connected");
    if (sigma.size() != d.crossing_count())
        throw std::invalid_argument("state size does not match diagram");
    RegionAssignment out;
    if (d.crossing_count() == 0) {
        out.region_count = d.free_loops + 1;
        return out;
    }
    auto fq = d.face_of_quadrant();
    const int nf = d.crossing_count() + 2;
    detail::DisjointSet ds(nf);
    for (int c = 0; c < d.crossing_count(); ++c) {
        if (sigma.choice[c] == Resolution::A)
            ds.unite(fq[c][1], fq[c][3]);  // bc, da
        else
            ds.unite(fq[c][0], fq[c][2]);  // ab, cd
    }
    std::map<int, int> id_of_root;
    for (int f = 0; f < nf; ++f) {
        int r = ds.find(f);
        if (!id_of_root.count(r))
            id_of_root.emplace(r, static_cast<int>(id_of_root.size()));
    }
    out.region_of_crossing.resize(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) {
        int f = sigma.choice[c] == Resolution::A ? fq[c][1] : fq[c][0];
        out.region_of_crossing[c] = id_of_root.at(ds.find(f));
    }
    out.region_count = static_cast<int>(id_of_root.size());
    return out;
}

/// A region of crossings carrying both labels, as homogeneity evidence.
struct MixedRegion {
    int region = -1;
    std::vector<int> crossings;
};

inline std::optional<MixedRegion> find_mixed_region(const LinkDiagram& d,
                                                    const KauffmanState& sigma) {
    auto ra = regions(d, sigma);
    std::map<int, Resolution> label_of_region;
    for (int c = 0; c < d.crossing_count(); ++c) {
        int reg = ra.region_of_crossing[c];
        auto it = label_of_region.find(reg);
        if (it == label_of_region.end())
            label_of_region.emplace(reg, sigma.choice[c]);
        else if (it->second != sigma.choice[c]) {
            MixedRegion mr;
            mr.region = reg;
            for (int c2 = 0; c2 < d.crossing_count(); ++c2)
                if (ra.region_of_crossing[c2] == reg)
                    mr.crossings.push_back(c2);
            return mr;
        }
    }
    return std::nullopt;
}

inline bool is_homogeneous(const LinkDiagram& d, const KauffmanState& sigma) {
    return !find_mixed_region(d, sigma).has_value();
}

/// The state graph: one vertex per circle, one labeled edge per crossing.
struct StateGraphEdge {
    int crossing;
    int u, v;  // circle ids, u <= v
    Resolution label;
};

struct StateGraph {
    int vertex_count = 0;
    std::vector<StateGraphEdge> edges;
};

inline StateGraph state_graph(const LinkDiagram& d, const KauffmanState& sigma) {
    auto circles = resolve(d, sigma);
    StateGraph g;
    g.vertex_count = circles.count;
    g.edges.reserve(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& s = d.crossings[c].slots;
        int u = circles.circle_of_arc[s[0]];
        int v = circles.circle_of_arc[sigma.choice[c] == Resolution::A ? s[2] : s[1]];
        if (u > v)
            std::swap(u, v);
        g.edges.push_back({c, u, v, sigma.choice[c]});
    }
    return g;
}

inline bool is_adequate(const LinkDiagram& d, const KauffmanState& sigma) {
    for (const auto& e : state_graph(d, sigma).edges)
        if (e.u == e.v)
            return false;
    return true;
}

/// One edge of the reduced graph, with the parallel class it absorbed.
struct ReducedEdge {
    int u, v;
    int multiplicity = 0;
    int count_a = 0;
    int count_b = 0;
    std::vector<int> crossings;
};

struct ReducedStateGraph {
    int vertex_count = 0;
    std::vector<ReducedEdge> edges;  // sorted by (u, v); self-loops kept, one per vertex

    int euler_characteristic() const {
        return vertex_count - static_cast<int>(edges.size());
    }

    bool has_self_loop() const {
        for (const auto& e : edges)
            if (e.u == e.v)
                return true;
        return false;
    }
};

inline ReducedStateGraph reduce(const StateGraph& g) {
    std::map<std::pair<int, int>, ReducedEdge> merged;
    for (const auto& e : g.edges) {
        auto& re = merged[{e.u, e.v}];
        re.u = e.u;
        re.v = e.v;
        ++re.multiplicity;
        (e.label == Resolution::A ? re.count_a : re.count_b) += 1;
        re.crossings.push_back(e.crossing);
    }
    ReducedStateGraph out;
    out.vertex_count = g.vertex_count;
    out.edges.reserve(merged.size());
    for (auto& [key, re] : merged)
        out.edges.push_back(std::move(re));
    return out;
}

/// Visit all 2^n states in deterministic order: state index i assigns
/// crossing c the B-resolution iff bit c of i is set.
inline void enumerate_states(const LinkDiagram& d,
                             const std::function<void(const KauffmanState&)>& visit,
                             int cap = 20) {
    const int n = d.crossing_count();
    if (n > cap)
        throw CapExceeded("diagram has " + std::to_string(n) +
                          " crossings, exceeding the state-enumeration cap of " +
                          std::to_string(cap));
    KauffmanState s;
    s.choice.assign(n, Resolution::A);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 0; i < total; ++i) {
        for (int c = 0; c < n; ++c)
            s.choice[c] = (i >> c) & 1u ? Resolution::B : Resolution::A;
        visit(s);
    }
}

inline std::vector<KauffmanState> enumerate_states(const LinkDiagram& d, int cap = 20) {
    std::vector<KauffmanState> out;
    enumerate_states(d, [&](const KauffmanState& s) { out.push_back(s); }, cap);
    return out;
}

}  // namespace statefiber
