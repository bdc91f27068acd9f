#pragma once

#include "statefiber/state.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace statefiber {

/// Connected, |E| = |V| - 1, and no self-loops.
inline bool is_tree(const ReducedStateGraph& g) {
    if (g.has_self_loop())
        return false;
    if (static_cast<int>(g.edges.size()) != g.vertex_count - 1)
        return false;
    detail::DisjointSet ds(g.vertex_count);
    int parts = g.vertex_count;
    for (const auto& e : g.edges)
        if (ds.unite(e.u, e.v))
            --parts;
    return parts == 1;
}

enum class Verdict { Fiber, NotFiber, TheoremInapplicable };

enum class NotFiberReason { None, Split, GraphNotTree };

struct FiberVerdict {
    Verdict verdict = Verdict::NotFiber;
    NotFiberReason reason = NotFiberReason::None;
    /// For GraphNotTree: crossings of a self-loop or cycle in G'_sigma.
    std::vector<int> witness_cycle;
    /// For TheoremInapplicable: a region carrying both labels.
    std::optional<MixedRegion> mixed_region;

    std::string to_string() const {
        switch (verdict) {
            case Verdict::Fiber:
                return "Fiber";
            case Verdict::NotFiber:
                return reason == NotFiberReason::Split ? "NotFiber:split"
                                                      : "NotFiber:not-tree";
            case Verdict::TheoremInapplicable:
                return "Inapplicable";
        }
        return "?";
    }
};

namespace detail {

/// A cycle in the reduced graph, reported as one representative crossing per
/// reduced edge (a single crossing for a self-loop).
inline std::vector<int> find_cycle_witness(const ReducedStateGraph& g) {
    for (const auto& e : g.edges)
        if (e.u == e.v)
            return {e.crossings.front()};
    // DFS for a cycle
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);  // (nbr, edge idx)
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        adj[g.edges[i].u].emplace_back(g.edges[i].v, i);
        adj[g.edges[i].v].emplace_back(g.edges[i].u, i);
    }
    std::vector<int> parent_edge(g.vertex_count, -1);
    std::vector<int> parent(g.vertex_count, -1);
    std::vector<char> seen(g.vertex_count, 0);
    for (int start = 0; start < g.vertex_count; ++start) {
        if (seen[start])
            continue;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, ei] : adj[v]) {
                if (ei == parent_edge[v])
                    continue;
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    parent_edge[w] = ei;
                    stack.push_back(w);
                } else {
                    // close the cycle v .. w through tree edges
                    std::vector<int> path_v, path_w;
                    std::vector<char> on_v(g.vertex_count, 0);
                    for (int x = v; x != -1; x = parent[x])
                        on_v[x] = 1;
                    int meet = w;
                    while (!on_v[meet])
                        meet = parent[meet];
                    std::vector<int> cycle{g.edges[ei].crossings.front()};
                    for (int x = v; x != meet; x = parent[x])
                        cycle.push_back(g.edges[parent_edge[x]].crossings.front());
                    for (int x = w; x != meet; x = parent[x])
                        cycle.push_back(g.edges[parent_edge[x]].crossings.front());
                    return cycle;
                }
            }
        }
    }
    return {};
}

}  // namespace detail

/// The Theorem 1 decision procedure with its special-case branches.
inline FiberVerdict detect_fiber(const LinkDiagram& d, const KauffmanState& sigma) {
    FiberVerdict out;
    if (!d.is_connected()) {
        out.verdict = Verdict::NotFiber;
        out.reason = NotFiberReason::Split;
        return out;
    }
    if (d.crossing_count() == 0) {
        // zero-crossing unknot: the spanning disk is a fiber
        out.verdict = Verdict::Fiber;
        return out;
    }
    if (auto mixed = find_mixed_region(d, sigma)) {
        out.verdict = Verdict::TheoremInapplicable;
        out.mixed_region = std::move(mixed);
        return out;
    }
    auto reduced = reduce(state_graph(d, sigma));
    if (is_tree(reduced)) {
        out.verdict = Verdict::Fiber;
        return out;
    }
    out.verdict = Verdict::NotFiber;
    out.reason = NotFiberReason::GraphNotTree;
    out.witness_cycle = detail::find_cycle_witness(reduced);
    return out;
}

/// Block/cut-vertex decomposition of G_sigma; each block's crossings form one
/// Murasugi summand.
struct MurasugiDecomposition {
    std::vector<std::vector<int>> blocks;       // crossing indices per block
    std::vector<int> cut_vertices;              // circle ids
    std::vector<ReducedStateGraph> block_graphs;
    bool connected = false;
};

inline std::vector<int> cut_vertices(const StateGraph& g) {
    // articulation points of the multigraph (parallel edges count separately)
    const int n = g.vertex_count;
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        adj[g.edges[i].u].emplace_back(g.edges[i].v, i);
        adj[g.edges[i].v].emplace_back(g.edges[i].u, i);
    }
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (auto [w, ei] : adj[v]) {
            if (ei == parent_edge)
                continue;
            if (disc[w] == -1) {
                ++children;
                dfs(w, ei);
                low[v] = std::min(low[v], low[w]);
                if (parent_edge != -1 && low[w] >= disc[v])
                    is_cut[v] = 1;
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent_edge == -1 && children > 1)
            is_cut[v] = 1;
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] == -1)
            dfs(v, -1);
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (is_cut[v])
            out.push_back(v);
    return out;
}

inline std::vector<int> cut_vertices(const ReducedStateGraph& g) {
    // same adjacency as the unreduced graph, so run on a flattened copy
    StateGraph flat;
    flat.vertex_count = g.vertex_count;
    for (const auto& e : g.edges)
        flat.edges.push_back({e.crossings.front(), e.u, e.v, Resolution::A});
    return cut_vertices(flat);
}

inline MurasugiDecomposition murasugi_decompose(const LinkDiagram& d,
                                                const KauffmanState& sigma) {
    if (!d.is_connected())
        throw std::logic_error("murasugi_decompose: diagram is not connected");
    if (!is_homogeneous(d, sigma))
        throw std::logic_error("murasugi_decompose: state is not homogeneous");
    StateGraph g = state_graph(d, sigma);
    MurasugiDecomposition out;
    out.cut_vertices = cut_vertices(g);
    out.connected = true;

    // biconnected components by edge stack; self-loops are their own blocks
    const int n = g.vertex_count;
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        if (g.edges[i].u == g.edges[i].v) {
            out.blocks.push_back({g.edges[i].crossing});
            continue;
        }
        adj[g.edges[i].u].emplace_back(g.edges[i].v, i);
        adj[g.edges[i].v].emplace_back(g.edges[i].u, i);
    }
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    int timer = 0;
    struct Frame {
        int v, parent_edge;
        size_t next = 0;
    };
    auto pop_block = [&](int until_edge) {
        std::vector<int> block;
        while (!edge_stack.empty()) {
            int ei = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(g.edges[ei].crossing);
            if (ei == until_edge)
                break;
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    };
    for (int start = 0; start < n; ++start) {
        if (disc[start] != -1)
            continue;
        std::vector<Frame> stack{{start, -1}};
        disc[start] = low[start] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [w, ei] = adj[f.v][f.next++];
                if (ei == f.parent_edge)
                    continue;
                if (disc[w] == -1) {
                    edge_stack.push_back(ei);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, ei});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(ei);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    low[p.v] = std::min(low[p.v], low[v]);
                    if (low[v] >= disc[p.v])
                        pop_block(pe);
                }
            }
        }
    }

    // per-block reduced graphs
    for (const auto& block : out.blocks) {
        StateGraph sub;
        std::map<int, int> vmap;
        for (int c : block) {
            const auto& e = g.edges[c];
            for (int x : {e.u, e.v})
                if (!vmap.count(x))
                    vmap.emplace(x, static_cast<int>(vmap.size()));
            int u = vmap.at(e.u), v = vmap.at(e.v);
            if (u > v)
                std::swap(u, v);
            sub.edges.push_back({c, u, v, e.label});
        }
        sub.vertex_count = static_cast<int>(vmap.size());
        out.block_graphs.push_back(reduce(sub));
    }
    return out;
}

/// Fiber iff every Murasugi summand's reduced graph is a tree.
inline FiberVerdict compose_verdicts(const MurasugiDecomposition& dec) {
    FiberVerdict out;
    if (!dec.connected) {
        out.verdict = Verdict::NotFiber;
        out.reason = NotFiberReason::Split;
        return out;
    }
    for (size_t i = 0; i < dec.block_graphs.size(); ++i) {
        if (!is_tree(dec.block_graphs[i])) {
            out.verdict = Verdict::NotFiber;
            out.reason = NotFiberReason::GraphNotTree;
            out.witness_cycle = detail::find_cycle_witness(dec.block_graphs[i]);
            // witness crossings are already diagram crossing indices
            return out;
        }
    }
    out.verdict = Verdict::Fiber;
    return out;
}

/// Cross-check of the cut-vertex characterization: for a connected diagram
/// with at least one crossing and a homogeneous adequate state,
/// G'_sigma has no cut vertices iff the diagram is prime and alternating and
/// sigma is the all-A or all-B state.
struct LemmaCutVertexReport {
    bool applicable = false;
    std::string skip_reason;
    bool no_cut_vertices = false;
    bool prime = false;
    bool alternating = false;
    bool all_a_or_all_b = false;
    bool holds = false;
};

inline LemmaCutVertexReport check_lemma_cut_vertices(const LinkDiagram& d,
                                                     const KauffmanState& sigma) {
    LemmaCutVertexReport r;
    if (!d.is_connected()) {
        r.skip_reason = "diagram is not connected";
        return r;
    }
    if (d.crossing_count() == 0) {
        r.skip_reason = "diagram has no crossings";
        return r;
    }
    if (!is_homogeneous(d, sigma)) {
        r.skip_reason = "state is not homogeneous";
        return r;
    }
    if (!is_adequate(d, sigma)) {
        r.skip_reason = "state is not adequate";
        return r;
    }
    r.applicable = true;
    r.no_cut_vertices = cut_vertices(state_graph(d, sigma)).empty();
    r.prime = d.is_prime();
    r.alternating = d.is_alternating();
    r.all_a_or_all_b =
        sigma.choice == all_a_state(d).choice || sigma.choice == all_b_state(d).choice;
    r.holds = r.no_cut_vertices == (r.prime && r.alternating && r.all_a_or_all_b);
    return r;
}

/// The four equivalent conditions of the prime-alternating base case, for the
/// all-A state.
struct BaseCaseReport {
    bool applicable = false;
    std::string skip_reason;
    bool reduced_graph_is_tree = false;
    bool two_vertices = false;
    bool positive_2braid = false;
    bool fiber = false;
    bool equivalent = false;
};

inline BaseCaseReport classify_base_case(const LinkDiagram& d) {
    BaseCaseReport r;
    if (!d.is_connected() || d.crossing_count() == 0) {
        r.skip_reason = "requires a connected diagram with >= 1 crossing";
        return r;
    }
    if (!d.is_prime()) {
        r.skip_reason = "diagram is not prime";
        return r;
    }
    if (!d.is_alternating()) {
        r.skip_reason = "diagram is not alternating";
        return r;
    }
    r.applicable = true;
    KauffmanState a = all_a_state(d);
    StateGraph g = state_graph(d, a);
    r.reduced_graph_is_tree = is_tree(reduce(g));
    r.two_vertices = g.vertex_count == 2;
    bool all_join_two = g.vertex_count == 2;
    for (const auto& e : g.edges)
        all_join_two = all_join_two && e.u != e.v;
    bool all_positive = true;
    for (int c = 0; c < d.crossing_count(); ++c)
        all_positive = all_positive && d.crossing_sign(c) > 0;
    r.positive_2braid = all_join_two && all_positive;
    r.fiber = detect_fiber(d, a).verdict == Verdict::Fiber;
    r.equivalent = r.reduced_graph_is_tree == r.two_vertices &&
                   r.two_vertices == r.positive_2braid && r.positive_2braid == r.fiber;
    return r;
}

}  // namespace statefiber
