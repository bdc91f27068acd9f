#pragma once

#include "statefiber/fiber.hpp"
#include "statefiber/graph_export.hpp"
#include "statefiber/jones.hpp"

#include <string>

namespace statefiber {

inline OrderedJson verdict_to_json(const FiberVerdict& v) {
    OrderedJson j;
    j["verdict"] = v.to_string();
    switch (v.reason) {
        case NotFiberReason::None:
            j["reason"] = nullptr;
            break;
        case NotFiberReason::Split:
            j["reason"] = "split";
            break;
        case NotFiberReason::GraphNotTree:
            j["reason"] = "graph-not-tree";
            break;
    }
    if (v.verdict == Verdict::TheoremInapplicable)
        j["reason"] = "state-not-homogeneous";
    j["witness_cycle"] = v.witness_cycle;
    if (v.mixed_region) {
        j["mixed_region"]["region"] = v.mixed_region->region;
        j["mixed_region"]["crossings"] = v.mixed_region->crossings;
    } else {
        j["mixed_region"] = nullptr;
    }
    return j;
}

inline OrderedJson jones_report_to_json(const JonesReport& r) {
    OrderedJson j;
    j["polynomial"] = jones_to_string(r.polynomial);
    j["k_half"] = r.k_half;
    j["m_half"] = r.m_half;
    // coefficients as strings: arbitrary precision safe
    j["alpha"] = r.alpha.str();
    j["beta"] = r.beta.str();
    j["beta_prime"] = r.beta_prime.str();
    j["alpha_prime"] = r.alpha_prime.str();
    return j;
}

inline OrderedJson corollary_report_to_json(const CorollaryReport& r) {
    OrderedJson j;
    if (!r.a_side_applicable && !r.b_side_applicable) {
        j["applicable"] = false;
        j["note"] = r.skip_reason;
        return j;
    }
    j["applicable"] = true;
    if (r.a_side_applicable) {
        OrderedJson a;
        a["beta_prime"] = r.beta_prime.str();
        a["chi_reduced"] = r.chi_reduced_a;
        a["tree"] = r.a_tree;
        a["fiber"] = r.a_fiber;
        a["magnitude_ok"] = r.a_magnitude_ok;
        a["equivalence_ok"] = r.a_equivalence_ok;
        j["a_side"] = std::move(a);
    } else {
        j["a_side"] = nullptr;
    }
    if (r.b_side_applicable) {
        OrderedJson b;
        b["beta"] = r.beta.str();
        b["chi_reduced"] = r.chi_reduced_b;
        b["tree"] = r.b_tree;
        b["fiber"] = r.b_fiber;
        b["magnitude_ok"] = r.b_magnitude_ok;
        b["equivalence_ok"] = r.b_equivalence_ok;
        j["b_side"] = std::move(b);
    } else {
        j["b_side"] = nullptr;
    }
    j["holds"] = r.holds();
    return j;
}

/// Full analysis of one diagram/state pair, serialized deterministically.
inline OrderedJson analysis_report(const LinkDiagram& d, const KauffmanState& sigma,
                                   const std::string& selector, bool include_jones = false,
                                   int cap = 20) {
    OrderedJson j;
    OrderedJson diag;
    diag["crossings"] = d.crossing_count();
    diag["arcs"] = d.arc_count();
    diag["free_loops"] = d.free_loops;
    diag["pieces"] = d.piece_count();
    diag["connected"] = d.is_connected();
    try {
        diag["components"] = d.orientation().component_count;
        diag["writhe"] = d.writhe();
    } catch (const OrientationError& e) {
        diag["components"] = nullptr;
        diag["writhe"] = nullptr;
        diag["orientation_error"] = e.what();
    }
    diag["alternating"] = d.is_alternating();
    if (d.is_connected() && d.crossing_count() > 0)
        diag["prime"] = d.is_prime();
    else
        diag["prime"] = nullptr;
    j["diagram"] = std::move(diag);

    OrderedJson st;
    st["selector"] = selector;
    st["label"] = sigma.to_string();
    auto circles = resolve(d, sigma);
    st["circles"] = circles.count;
    st["adequate"] = is_adequate(d, sigma);
    if (d.is_connected())
        st["homogeneous"] = is_homogeneous(d, sigma);
    else
        st["homogeneous"] = nullptr;
    st["surface_euler_characteristic"] = euler_characteristic_of_surface(d, sigma);
    j["state"] = std::move(st);

    StateGraph g = state_graph(d, sigma);
    j["state_graph"] = graph_to_json(g);
    j["reduced_graph"] = reduced_graph_to_json(reduce(g));

    j["verdict"] = verdict_to_json(detect_fiber(d, sigma));

    if (d.is_connected() && is_homogeneous(d, sigma)) {
        auto dec = murasugi_decompose(d, sigma);
        OrderedJson jd;
        jd["cut_vertices"] = dec.cut_vertices;
        jd["blocks"] = dec.blocks;
        jd["composed_verdict"] = compose_verdicts(dec).to_string();
        j["decomposition"] = std::move(jd);
    } else {
        j["decomposition"] = nullptr;
    }

    if (include_jones) {
        j["jones"] = jones_report_to_json(jones_report(d, cap));
        j["corollary"] = corollary_report_to_json(check_corollary(d, cap));
    }
    return j;
}

}  // namespace statefiber
