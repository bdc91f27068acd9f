#pragma once

#include "statefiber/fiber.hpp"
#include "statefiber/laurent.hpp"
#include "statefiber/state.hpp"

#include <string>
#include <vector>

namespace statefiber {

/// Kauffman bracket by the full state sum:
///   <D> = sum over states of A^(#A - #B) * (-A^2 - A^-2)^(circles - 1).
/// Exponents are powers of A.
inline LaurentPoly kauffman_bracket(const LinkDiagram& d, int cap = 20) {
    const LaurentPoly delta =
        LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    // precompute delta powers; circle counts stay below n + free_loops + 1
    std::vector<LaurentPoly> delta_pow{LaurentPoly::constant(1)};
    for (int k = 0; k <= d.crossing_count() + d.free_loops + 1; ++k)
        delta_pow.push_back(delta_pow.back() * delta);
    LaurentPoly sum;
    enumerate_states(
        d,
        [&](const KauffmanState& s) {
            int a_minus_b = 0;
            for (Resolution r : s.choice)
                a_minus_b += r == Resolution::A ? 1 : -1;
            int circles = resolve(d, s).count;
            sum += LaurentPoly::monomial(1, a_minus_b) * delta_pow[circles - 1];
        },
        cap);
    return sum;
}

/// Jones polynomial (-A)^(-3w) <D> rewritten in t = A^(-4). Exponents of the
/// result are in units of t^(1/2), so links are covered without fractions.
inline LaurentPoly jones_polynomial(const LinkDiagram& d, int cap = 20) {
    LaurentPoly bracket = kauffman_bracket(d, cap);
    const int w = d.writhe();
    LaurentPoly normalized =
        ((w % 2 == 0) ? BigInt(1) : BigInt(-1)) * bracket.shifted(-3 * w);
    LaurentPoly out;
    for (const auto& [e, c] : normalized.terms()) {
        if (e % 2 != 0)
            throw std::logic_error("bracket exponent parity violated");
        // A^e = t^(-e/4) = (t^(1/2))^(-e/2)
        out += LaurentPoly::monomial(c, -e / 2);
    }
    return out;
}

/// Jones polynomial serialized as sorted c*t^(p/2) terms, ascending degree.
inline std::string jones_to_string(const LaurentPoly& jones_half_units) {
    if (jones_half_units.is_zero())
        return "0";
    std::string out;
    for (const auto& [e, c] : jones_half_units.terms()) {
        if (!out.empty())
            out += " + ";
        out += c.str() + "*t^(" + std::to_string(e) + "/2)";
    }
    return out;
}

/// J_K(t) = alpha t^k + beta t^(k-1) + ... + beta' t^(m+1) + alpha' t^m.
/// Degrees are stored in half-units of t (k_half = 2k).
struct JonesReport {
    LaurentPoly polynomial;  // in t^(1/2) units
    int k_half = 0;
    int m_half = 0;
    BigInt alpha;
    BigInt beta;        // coefficient at t^(k-1), possibly zero
    BigInt beta_prime;  // coefficient at t^(m+1), possibly zero
    BigInt alpha_prime;
};

inline JonesReport extract_coefficients(const LaurentPoly& jones) {
    if (jones.is_zero())
        throw std::invalid_argument("extract_coefficients: zero polynomial");
    JonesReport r;
    r.polynomial = jones;
    r.k_half = jones.max_exp();
    r.m_half = jones.min_exp();
    r.alpha = jones.coeff(r.k_half);
    r.alpha_prime = jones.coeff(r.m_half);
    r.beta = jones.coeff(r.k_half - 2);
    r.beta_prime = jones.coeff(r.m_half + 2);
    return r;
}

inline JonesReport jones_report(const LinkDiagram& d, int cap = 20) {
    return extract_coefficients(jones_polynomial(d, cap));
}

/// The coefficient cross-check: on the A-adequate side,
/// |beta'| = 1 - chi(G'_A) and beta' = 0 iff G'_A is a tree iff the all-A
/// state surface is a fiber; symmetrically |beta| = 1 - chi(G'_B) when
/// B-adequate.
struct CorollaryReport {
    bool a_side_applicable = false;
    bool b_side_applicable = false;
    std::string skip_reason;

    BigInt beta_prime;
    int chi_reduced_a = 0;
    bool a_tree = false;
    bool a_fiber = false;
    bool a_magnitude_ok = false;
    bool a_equivalence_ok = false;

    BigInt beta;
    int chi_reduced_b = 0;
    bool b_tree = false;
    bool b_fiber = false;
    bool b_magnitude_ok = false;
    bool b_equivalence_ok = false;

    bool holds() const {
        bool ok = true;
        if (a_side_applicable)
            ok = ok && a_magnitude_ok && a_equivalence_ok;
        if (b_side_applicable)
            ok = ok && b_magnitude_ok && b_equivalence_ok;
        return ok;
    }
};

inline CorollaryReport check_corollary(const LinkDiagram& d, int cap = 20) {
    CorollaryReport r;
    if (!d.is_connected()) {
        r.skip_reason = "corollary inapplicable: split diagram";
        return r;
    }
    if (d.crossing_count() == 0) {
        r.skip_reason = "corollary inapplicable: no crossings";
        return r;
    }
    const bool a_adequate = is_adequate(d, all_a_state(d));
    const bool b_adequate = is_adequate(d, all_b_state(d));
    if (!a_adequate && !b_adequate) {
        r.skip_reason = "corollary inapplicable: diagram is neither A- nor B-adequate";
        return r;
    }
    JonesReport jr = jones_report(d, cap);
    if (a_adequate) {
        r.a_side_applicable = true;
        auto reduced = reduce(state_graph(d, all_a_state(d)));
        r.beta_prime = jr.beta_prime;
        r.chi_reduced_a = reduced.euler_characteristic();
        r.a_tree = is_tree(reduced);
        r.a_fiber = detect_fiber(d, all_a_state(d)).verdict == Verdict::Fiber;
        r.a_magnitude_ok = abs(r.beta_prime) == 1 - r.chi_reduced_a;
        r.a_equivalence_ok =
            (r.beta_prime == 0) == r.a_tree && r.a_tree == r.a_fiber;
    }
    if (b_adequate) {
        r.b_side_applicable = true;
        auto reduced = reduce(state_graph(d, all_b_state(d)));
        r.beta = jr.beta;
        r.chi_reduced_b = reduced.euler_characteristic();
        r.b_tree = is_tree(reduced);
        r.b_fiber = detect_fiber(d, all_b_state(d)).verdict == Verdict::Fiber;
        r.b_magnitude_ok = abs(r.beta) == 1 - r.chi_reduced_b;
        r.b_equivalence_ok = (r.beta == 0) == r.b_tree && r.b_tree == r.b_fiber;
    }
    return r;
}

}  // namespace statefiber
