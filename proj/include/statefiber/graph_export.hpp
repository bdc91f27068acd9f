#pragma once

#include "statefiber/state.hpp"

#include <json.hpp>

#include <string>

namespace statefiber {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson graph_to_json(const StateGraph& g) {
    OrderedJson j;
    j["vertices"] = g.vertex_count;
    auto& edges = j["edges"] = OrderedJson::array();
    for (const auto& e : g.edges) {
        OrderedJson je;
        je["crossing"] = e.crossing;
        je["u"] = e.u;
        je["v"] = e.v;
        je["label"] = std::string(1, resolution_char(e.label));
        edges.push_back(std::move(je));
    }
    return j;
}

inline OrderedJson reduced_graph_to_json(const ReducedStateGraph& g) {
    OrderedJson j;
    j["vertices"] = g.vertex_count;
    auto& edges = j["edges"] = OrderedJson::array();
    for (const auto& e : g.edges) {
        OrderedJson je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["multiplicity"] = e.multiplicity;
        je["labels"]["A"] = e.count_a;
        je["labels"]["B"] = e.count_b;
        je["crossings"] = e.crossings;
        edges.push_back(std::move(je));
    }
    j["chi"] = g.euler_characteristic();
    return j;
}

/// DOT rendering of G_sigma: one line per parallel edge, each labeled with
/// its resolution and crossing, plus the multiplicity of its parallel class.
inline std::string graph_to_dot(const StateGraph& g, const std::string& name = "state_graph") {
    auto reduced = reduce(g);
    auto multiplicity_of = [&](int u, int v) {
        for (const auto& re : reduced.edges)
            if (re.u == u && re.v == v)
                return re.multiplicity;
        return 0;
    };
    std::string out = "graph " + name + " {\n";
    for (int v = 0; v < g.vertex_count; ++v)
        out += "  v" + std::to_string(v) + " [label=\"circle " + std::to_string(v) + "\"];\n";
    for (const auto& e : g.edges)
        out += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) + " [label=\"" +
               resolution_char(e.label) + " c" + std::to_string(e.crossing) + " x" +
               std::to_string(multiplicity_of(e.u, e.v)) + "\"];\n";
    out += "}\n";
    return out;
}

/// DOT rendering of G'_sigma: one line per reduced edge, multiplicity and the
/// absorbed label multiset in the label.
inline std::string reduced_graph_to_dot(const ReducedStateGraph& g,
                                        const std::string& name = "reduced_state_graph") {
    std::string out = "graph " + name + " {\n";
    for (int v = 0; v < g.vertex_count; ++v)
        out += "  v" + std::to_string(v) + " [label=\"circle " + std::to_string(v) + "\"];\n";
    for (const auto& e : g.edges) {
        std::string label;
        if (e.count_a > 0)
            label += "A*" + std::to_string(e.count_a);
        if (e.count_b > 0)
            label += (label.empty() ? "" : " ") + std::string("B*") + std::to_string(e.count_b);
        out += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) + " [label=\"" +
               label + " x" + std::to_string(e.multiplicity) + "\"];\n";
    }
    out += "}\n";
    return out;
}

inline OrderedJson diagram_to_json(const LinkDiagram& d) {
    OrderedJson j;
    auto& crossings = j["crossings"] = OrderedJson::array();
    for (const auto& c : d.crossings)
        crossings.push_back({c.slots[0], c.slots[1], c.slots[2], c.slots[3]});
    j["free_loops"] = d.free_loops;
    return j;
}

inline LinkDiagram diagram_from_json(const OrderedJson& j) {
    LinkDiagram d;
    if (!j.is_object() || !j.contains("crossings"))
        throw ParseError("diagram JSON must be an object with a 'crossings' array");
    for (const auto& arr : j.at("crossings")) {
        if (!arr.is_array() || arr.size() != 4)
            throw ParseError("each crossing must be a 4-tuple of arc ids");
        d.crossings.push_back(
            {{arr[0].get<int>(), arr[1].get<int>(), arr[2].get<int>(), arr[3].get<int>()}});
    }
    d.free_loops = j.value("free_loops", 0);
    d.validate();
    return d;
}

}  // namespace statefiber
