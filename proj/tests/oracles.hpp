// Independent re-implementations used to cross-check production code.
// These deliberately avoid the union-find machinery in the library: circles
// are counted by walking darts around the diagram, and the bracket oracle is
// a direct state sum on top of that walk.
#pragma once

#include "statefiber/diagram.hpp"
#include "statefiber/laurent.hpp"
#include "statefiber/state.hpp"

#include <map>
#include <vector>

namespace oracle {

// Smoothing partner of a slot at one crossing: A joins slots (a,b) and (c,d),
// B joins (a,d) and (b,c).
inline int partner_slot(int slot, statefiber::Resolution r) {
    if (r == statefiber::Resolution::A) {
        static constexpr int p[4] = {1, 0, 3, 2};
        return p[slot];
    }
    static constexpr int p[4] = {3, 2, 1, 0};
    return p[slot];
}

// Count state circles by orbit tracing. The map
//   dart -> mate(partner(dart))
// walks a circle in one direction, so every circle is covered by exactly two
// orbits (one per direction).
inline int circle_count(const statefiber::LinkDiagram& d,
                        const statefiber::KauffmanState& sigma) {
    const int n = d.crossing_count();
    std::vector<char> seen(4 * n, 0);
    int orbits = 0;
    for (int c0 = 0; c0 < n; ++c0)
        for (int s0 = 0; s0 < 4; ++s0) {
            if (seen[4 * c0 + s0])
                continue;
            ++orbits;
            statefiber::Dart d0{c0, s0};
            while (!seen[4 * d0.crossing + d0.slot]) {
                seen[4 * d0.crossing + d0.slot] = 1;
                statefiber::Dart hop{d0.crossing,
                                     partner_slot(d0.slot, sigma.choice[d0.crossing])};
                d0 = d.mate(hop);
            }
        }
    return orbits / 2 + d.free_loops;
}

// Kauffman bracket straight from the definition, powered by the oracle circle
// count rather than the library's resolve().
inline statefiber::LaurentPoly bracket(const statefiber::LinkDiagram& d) {
    using statefiber::LaurentPoly;
    const int n = d.crossing_count();
    const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    LaurentPoly sum;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        statefiber::KauffmanState s;
        int a_minus_b = 0;
        for (int c = 0; c < n; ++c) {
            bool is_b = (bits >> c) & 1u;
            s.choice.push_back(is_b ? statefiber::Resolution::B : statefiber::Resolution::A);
            a_minus_b += is_b ? -1 : 1;
        }
        sum += LaurentPoly::monomial(1, a_minus_b) * delta.pow(circle_count(d, s) - 1);
    }
    return sum;
}

}  // namespace oracle
