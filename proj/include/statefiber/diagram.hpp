#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace statefiber {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OrientationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One crossing of a planar diagram. slots = (a,b,c,d) lists the four incident
/// arc ids counterclockwise, starting from the incoming under-strand arc.
/// The under-strand runs a -> c; the over-strand occupies b and d.
struct Crossing {
    std::array<int, 4> slots;
};

/// A dart is one of the two ends of an arc: (crossing index, slot index).
struct Dart {
    int crossing = -1;
    int slot = -1;

    friend bool operator==(const Dart&, const Dart&) = default;
};

/// A complementary face of the projection. Corners are (crossing, quadrant)
/// pairs; quadrant q lies counterclockwise between slot q and slot q+1 mod 4
/// (0=ab, 1=bc, 2=cd, 3=da).
struct Face {
    std::vector<std::pair<int, int>> corners;
};

/// Orientation data recovered from consecutive arc numbering.
struct OrientationData {
    std::vector<int> over_in_slot;   // per crossing: 1 or 3
    std::vector<int> sign;           // per crossing: +1 or -1
    std::vector<int> component_of;   // arc id -> link component index
    int component_count = 0;
};

namespace detail {

class DisjointSet {
public:
    explicit DisjointSet(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

/// A link diagram in PD form. Arcs are numbered 1..2n, consecutively along
/// each link component; free_loops counts closed crossing-free components.
class LinkDiagram {
public:
    std::vector<Crossing> crossings;
    int free_loops = 0;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int arc_count() const { return 2 * crossing_count(); }

    /// Both darts of an arc, in slot-scan order.
    const std::array<Dart, 2>& arc_darts(int arc) const { return arc_darts_.at(arc - 1); }

    Dart mate(const Dart& d) const {
        const auto& ends = arc_darts(arc_at(d));
        return (ends[0] == d) ? ends[1] : ends[0];
    }

    int arc_at(const Dart& d) const { return crossings[d.crossing].slots[d.slot]; }

    /// Validates arc pairing, arc-id range and sphere realizability.
    /// Must be called after filling crossings/free_loops; parse_pd does so.
    void validate() {
        index_arcs();
        check_planarity();
    }

    /// Connected pieces of the crossing/arc incidence structure. Free loops
    /// are their own pieces and are reported separately.
    int piece_count() const {
        if (crossings.empty())
            return free_loops == 0 ? 0 : free_loops;
        return crossing_piece_count() + free_loops;
    }

    bool is_connected() const { return piece_count() <= 1; }

    /// Faces of the rotation system. Requires a connected diagram.
    std::vector<Face> faces() const {
        if (!is_connected())
            throw std::logic_error("faces: diagram is not connected");
        return trace_faces(all_crossing_indices());
    }

    /// Face index of each quadrant: result[crossing][quadrant].
    std::vector<std::array<int, 4>> face_of_quadrant() const {
        auto fs = faces();
        std::vector<std::array<int, 4>> out(crossings.size(), {-1, -1, -1, -1});
        for (int f = 0; f < static_cast<int>(fs.size()); ++f)
            for (const auto& [c, q] : fs[f].corners)
                out[c][q] = f;
        return out;
    }

    std::vector<LinkDiagram> split_components() const;

    /// True iff along every strand, crossings are met alternately under/over.
    /// Equivalently every arc has one under end (slot a/c) and one over end.
    bool is_alternating() const {
        for (int arc = 1; arc <= arc_count(); ++arc) {
            const auto& ends = arc_darts(arc);
            if (is_under_slot(ends[0].slot) == is_under_slot(ends[1].slot))
                return false;
        }
        return true;
    }

    /// Combinatorial primeness: no pair of distinct arcs disconnects the
    /// 4-valent projection graph into two parts that each contain a crossing.
    bool is_prime() const {
        if (!is_connected() || crossings.empty())
            throw std::logic_error("is_prime: requires a connected diagram with >= 1 crossing");
        const int n = crossing_count();
        if (n == 1)
            return true;
        const int m = arc_count();
        for (int x = 1; x <= m; ++x)
            for (int y = x + 1; y <= m; ++y)
                if (!connected_without(x, y))
                    return false;
        return true;
    }

    const OrientationData& orientation() const {
        if (!orientation_)
            orientation_ = recover_orientation();
        return *orientation_;
    }

    int crossing_sign(int crossing) const { return orientation().sign.at(crossing); }

    int writhe() const {
        const auto& o = orientation();
        return std::accumulate(o.sign.begin(), o.sign.end(), 0);
    }

    /// Mirror image: over/under is swapped at every crossing by cycling each
    /// slot tuple so that the old over-strand becomes the new under-strand.
    /// The rotation direction depends on which way the over-strand runs, so
    /// that the new under-strand still reads tail-to-head as (a, c).
    LinkDiagram mirror() const {
        const auto& o = orientation();
        LinkDiagram out;
        out.free_loops = free_loops;
        out.crossings.reserve(crossings.size());
        for (int i = 0; i < crossing_count(); ++i) {
            const auto& s = crossings[i].slots;
            if (o.over_in_slot[i] == 3)
                out.crossings.push_back({{s[3], s[0], s[1], s[2]}});
            else
                out.crossings.push_back({{s[1], s[2], s[3], s[0]}});
        }
        out.validate();
        return out;
    }

    /// Insert a Reidemeister-I kink of the given sign on an arc. Passing
    /// arc = 0 kinks a free loop instead (free_loops must be positive).
    LinkDiagram add_r1_kink(int arc, int sign) const;

    /// Head dart of an arc: the slot where the arc runs into a crossing.
    Dart head_of_arc(int arc) const {
        const auto& o = orientation();
        for (const Dart& d : arc_darts(arc)) {
            if (d.slot == 0)
                return d;
            if ((d.slot == 1 || d.slot == 3) && d.slot == o.over_in_slot[d.crossing])
                return d;
        }
        throw std::logic_error("arc " + std::to_string(arc) + " has no incoming end");
    }

    static bool is_under_slot(int slot) { return slot == 0 || slot == 2; }

private:
    std::vector<std::array<Dart, 2>> arc_darts_;  // arc-1 -> its two darts
    mutable std::optional<OrientationData> orientation_;

    std::vector<int> all_crossing_indices() const {
        std::vector<int> idx(crossings.size());
        std::iota(idx.begin(), idx.end(), 0);
        return idx;
    }

    void index_arcs() {
        const int m = arc_count();
        std::vector<std::vector<Dart>> where(m);
        for (int c = 0; c < crossing_count(); ++c)
            for (int s = 0; s < 4; ++s) {
                int arc = crossings[c].slots[s];
                if (arc < 1 || arc > m)
                    throw ParseError("arc id " + std::to_string(arc) +
                                     " out of range 1.." + std::to_string(m));
                where[arc - 1].push_back({c, s});
            }
        arc_darts_.clear();
        arc_darts_.reserve(m);
        for (int a = 0; a < m; ++a) {
            if (where[a].size() != 2)
                throw ParseError("arc " + std::to_string(a + 1) + " occurs " +
                                 std::to_string(where[a].size()) + " times, expected 2");
            arc_darts_.push_back({where[a][0], where[a][1]});
        }
        orientation_.reset();
    }

    int crossing_piece_count() const {
        detail::DisjointSet ds(crossing_count());
        int pieces = crossing_count();
        for (const auto& ends : arc_darts_)
            if (ds.unite(ends[0].crossing, ends[1].crossing))
                --pieces;
        return pieces;
    }

    /// Face tracing over the rotation system restricted to a crossing subset.
    std::vector<Face> trace_faces(const std::vector<int>& subset) const {
        std::vector<char> in_subset(crossings.size(), 0);
        for (int c : subset)
            in_subset[c] = 1;
        std::vector<char> used(4 * crossings.size(), 0);
        std::vector<Face> out;
        for (int c0 : subset)
            for (int s0 = 0; s0 < 4; ++s0) {
                if (used[4 * c0 + s0])
                    continue;
                Face face;
                Dart d{c0, s0};
                while (!used[4 * d.crossing + d.slot]) {
                    used[4 * d.crossing + d.slot] = 1;
                    Dart m = mate(d);
                    if (!in_subset[m.crossing])
                        throw std::logic_error("face trace escaped component");
                    face.corners.emplace_back(m.crossing, m.slot);  // quadrant index
                    d = {m.crossing, (m.slot + 1) % 4};
                }
                out.push_back(std::move(face));
            }
        return out;
    }

    void check_planarity() const {
        // Euler check per connected piece: V - E + F = 2 with V = n_i, E = 2 n_i.
        detail::DisjointSet ds(crossing_count());
        for (const auto& ends : arc_darts_)
            ds.unite(ends[0].crossing, ends[1].crossing);
        std::map<int, std::vector<int>> pieces;
        for (int c = 0; c < crossing_count(); ++c)
            pieces[ds.find(c)].push_back(c);
        for (const auto& [root, members] : pieces) {
            auto fs = trace_faces(members);
            const int n = static_cast<int>(members.size());
            if (static_cast<int>(fs.size()) != n + 2)
                throw ParseError("diagram is not realizable on the sphere: a piece with " +
                                 std::to_string(n) + " crossings traced " +
                                 std::to_string(fs.size()) + " faces, expected " +
                                 std::to_string(n + 2));
        }
    }

    bool connected_without(int arc_x, int arc_y) const {
        const int n = crossing_count();
        std::vector<std::vector<int>> adj(n);
        for (int a = 1; a <= arc_count(); ++a) {
            if (a == arc_x || a == arc_y)
                continue;
            const auto& ends = arc_darts(a);
            adj[ends[0].crossing].push_back(ends[1].crossing);
            adj[ends[1].crossing].push_back(ends[0].crossing);
        }
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int nb : adj[c])
                if (!seen[nb]) {
                    seen[nb] = 1;
                    ++count;
                    stack.push_back(nb);
                }
        }
        return count == n;
    }

    OrientationData recover_orientation() const;
};

// ---------------------------------------------------------------------------
// Orientation recovery
// ---------------------------------------------------------------------------

inline OrientationData LinkDiagram::recover_orientation() const {
    const int n = crossing_count();
    const int m = arc_count();
    OrientationData o;
    o.over_in_slot.assign(n, -1);
    o.sign.assign(n, 0);
    o.component_of.assign(m + 1, -1);

    // Link components: arcs joined by strand continuity (a~c, b~d).
    detail::DisjointSet ds(m);
    for (const auto& c : crossings) {
        ds.unite(c.slots[0] - 1, c.slots[2] - 1);
        ds.unite(c.slots[1] - 1, c.slots[3] - 1);
    }
    std::map<int, std::pair<int, int>> range;  // root -> [lo, hi]
    for (int a = 1; a <= m; ++a) {
        int r = ds.find(a - 1);
        auto it = range.find(r);
        if (it == range.end())
            range[r] = {a, a};
        else {
            it->second.first = std::min(it->second.first, a);
            it->second.second = std::max(it->second.second, a);
        }
    }
    std::map<int, int> comp_index;
    std::vector<std::pair<int, int>> comp_range;
    for (const auto& [root, lohi] : range) {
        comp_index[root] = static_cast<int>(comp_range.size());
        comp_range.push_back(lohi);
    }
    o.component_count = static_cast<int>(comp_range.size()) + free_loops;
    std::vector<int> comp_size(comp_range.size());
    for (size_t i = 0; i < comp_range.size(); ++i)
        comp_size[i] = comp_range[i].second - comp_range[i].first + 1;
    for (int a = 1; a <= m; ++a)
        o.component_of[a] = comp_index.at(ds.find(a - 1));
    // each component's arc ids must form a consecutive block
    {
        std::vector<int> seen_in(comp_range.size(), 0);
        for (int a = 1; a <= m; ++a)
            ++seen_in[o.component_of[a]];
        for (size_t i = 0; i < comp_range.size(); ++i)
            if (seen_in[i] != comp_size[i])
                throw OrientationError(
                    "arc ids of a link component are not consecutive; orientation unrecoverable");
    }

    auto succ = [&](int a) {
        int comp = o.component_of[a];
        auto [lo, hi] = comp_range[comp];
        return a == hi ? lo : a + 1;
    };

    // Under-strands must run a -> succ(a).
    for (int c = 0; c < n; ++c) {
        int a = crossings[c].slots[0];
        int out = crossings[c].slots[2];
        if (succ(a) != out)
            throw OrientationError("crossing " + std::to_string(c) +
                                   ": under-strand arcs are not consecutive (" +
                                   std::to_string(a) + " -> " + std::to_string(out) + ")");
    }

    // Over-strands: decide which of slots b/d is the incoming end.
    // succ() settles it except on 2-arc components, where both readings are
    // numerically consistent; those are resolved by head/tail propagation
    // anchored at under-strand slots, with a deterministic fallback.
    enum Role : signed char { kUnknown = 0, kHead = 1, kTail = -1 };
    std::vector<Role> role(4 * n, kUnknown);  // role of the dart's slot
    std::vector<int> pending;
    for (int c = 0; c < n; ++c) {
        role[4 * c + 0] = kHead;
        role[4 * c + 2] = kTail;
        int b = crossings[c].slots[1];
        int d = crossings[c].slots[3];
        bool d_in = succ(d) == b;
        bool b_in = succ(b) == d;
        if (!d_in && !b_in)
            throw OrientationError("crossing " + std::to_string(c) +
                                   ": over-strand arcs are not consecutive (" +
                                   std::to_string(b) + " / " + std::to_string(d) + ")");
        if (d_in != b_in) {
            o.over_in_slot[c] = d_in ? 3 : 1;
            role[4 * c + (d_in ? 3 : 1)] = kHead;
            role[4 * c + (d_in ? 1 : 3)] = kTail;
        } else {
            pending.push_back(c);
        }
    }
    if (!pending.empty()) {
        // propagate: the two darts of an arc have opposite roles, and so do
        // the two over slots of a crossing
        bool changed = true;
        auto set_role = [&](const Dart& d, Role r, bool& flag) {
            Role& slot = role[4 * d.crossing + d.slot];
            if (slot == kUnknown) {
                slot = r;
                flag = true;
            }
        };
        while (changed) {
            changed = false;
            for (int a = 1; a <= m; ++a) {
                const auto& ends = arc_darts(a);
                Role r0 = role[4 * ends[0].crossing + ends[0].slot];
                Role r1 = role[4 * ends[1].crossing + ends[1].slot];
                if (r0 != kUnknown && r1 == kUnknown)
                    set_role(ends[1], r0 == kHead ? kTail : kHead, changed);
                else if (r1 != kUnknown && r0 == kUnknown)
                    set_role(ends[0], r1 == kHead ? kTail : kHead, changed);
            }
            for (int c = 0; c < n; ++c) {
                Role rb = role[4 * c + 1];
                Role rd = role[4 * c + 3];
                if (rb != kUnknown && rd == kUnknown)
                    set_role({c, 3}, rb == kHead ? kTail : kHead, changed);
                else if (rd != kUnknown && rb == kUnknown)
                    set_role({c, 1}, rd == kHead ? kTail : kHead, changed);
            }
        }
        for (int c : pending) {
            if (role[4 * c + 3] == kHead)
                o.over_in_slot[c] = 3;
            else if (role[4 * c + 1] == kHead)
                o.over_in_slot[c] = 1;
            else
                o.over_in_slot[c] = 3;  // fully ambiguous: both orientations valid
        }
    }

    // Sign: positive when the over-strand runs d -> b.
    for (int c = 0; c < n; ++c)
        o.sign[c] = o.over_in_slot[c] == 3 ? +1 : -1;
    return o;
}

// ---------------------------------------------------------------------------
// split_components / add_r1_kink
// ---------------------------------------------------------------------------

inline std::vector<LinkDiagram> LinkDiagram::split_components() const {
    std::vector<LinkDiagram> out;
    if (!crossings.empty()) {
        detail::DisjointSet ds(crossing_count());
        for (const auto& ends : arc_darts_)
            ds.unite(ends[0].crossing, ends[1].crossing);
        std::map<int, std::vector<int>> pieces;
        for (int c = 0; c < crossing_count(); ++c)
            pieces[ds.find(c)].push_back(c);
        for (const auto& [root, members] : pieces) {
            // renumber this piece's arcs to 1..2k, preserving the consecutive
            // blocks of its link components in ascending order
            std::set<int> arcs;
            for (int c : members)
                for (int s = 0; s < 4; ++s)
                    arcs.insert(crossings[c].slots[s]);
            std::map<int, int> rename;
            int next = 1;
            for (int a : arcs)
                rename[a] = next++;
            LinkDiagram piece;
            for (int c : members) {
                Crossing cr = crossings[c];
                for (int s = 0; s < 4; ++s)
                    cr.slots[s] = rename.at(cr.slots[s]);
                piece.crossings.push_back(cr);
            }
            piece.validate();
            out.push_back(std::move(piece));
        }
    }
    for (int i = 0; i < free_loops; ++i) {
        LinkDiagram loop;
        loop.free_loops = 1;
        loop.validate();
        out.push_back(std::move(loop));
    }
    return out;
}

inline LinkDiagram LinkDiagram::add_r1_kink(int arc, int sign) const {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("add_r1_kink: sign must be +1 or -1");
    LinkDiagram out;
    if (arc == 0) {
        if (free_loops < 1)
            throw std::invalid_argument("add_r1_kink: no free loop to kink");
        out = *this;
        out.free_loops -= 1;
        int x = arc_count() + 1;
        if (sign > 0)
            out.crossings.push_back({{x, x, x + 1, x + 1}});
        else
            out.crossings.push_back({{x, x + 1, x + 1, x}});
        out.orientation_.reset();
        out.validate();
        return out;
    }
    if (arc < 1 || arc > arc_count())
        throw std::invalid_argument("add_r1_kink: arc " + std::to_string(arc) +
                                    " does not exist");
    // The kink splits the arc into three pieces: arc runs into the new
    // crossing, arc+1 is the loop, and arc+2 continues to the old head.
    Dart head = head_of_arc(arc);
    out.free_loops = free_loops;
    for (int c = 0; c < crossing_count(); ++c) {
        Crossing cr = crossings[c];
        for (int s = 0; s < 4; ++s) {
            int a = cr.slots[s];
            if (a > arc)
                cr.slots[s] = a + 2;
            else if (a == arc && head == Dart{c, s})
                cr.slots[s] = arc + 2;
        }
        out.crossings.push_back(cr);
    }
    if (sign > 0)
        out.crossings.push_back({{arc, arc + 2, arc + 1, arc + 1}});
    else
        out.crossings.push_back({{arc, arc + 1, arc + 1, arc + 2}});
    out.validate();
    return out;
}

// ---------------------------------------------------------------------------
// PD text parsing / serialization
// ---------------------------------------------------------------------------

/// Parse whitespace-separated `X(a,b,c,d)` tokens plus optional `O` tokens.
inline LinkDiagram parse_pd(const std::string& text) {
    LinkDiagram d;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                                   text[i] == ','))
            ++i;
    };
    while (true) {
        skip_ws();
        if (i >= text.size())
            break;
        char t = text[i];
        if (t == 'O' || t == 'o') {
            ++i;
            ++d.free_loops;
            continue;
        }
        if (t != 'X' && t != 'x')
            throw ParseError(std::string("unexpected token starting with '") + t +
                             "' at offset " + std::to_string(i));
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] != '(')
            throw ParseError("expected '(' after X at offset " + std::to_string(i));
        ++i;
        std::array<int, 4> slots{};
        for (int s = 0; s < 4; ++s) {
            skip_ws();
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (i == start)
                throw ParseError("expected arc number at offset " + std::to_string(i));
            slots[s] = std::stoi(text.substr(start, i - start));
        }
        skip_ws();
        if (i >= text.size() || text[i] != ')')
            throw ParseError("expected ')' at offset " + std::to_string(i));
        ++i;
        d.crossings.push_back({slots});
    }
    d.validate();
    return d;
}

inline std::string to_pd_string(const LinkDiagram& d) {
    std::string out;
    for (const auto& c : d.crossings) {
        if (!out.empty())
            out += " ";
        out += "X(" + std::to_string(c.slots[0]) + "," + std::to_string(c.slots[1]) + "," +
               std::to_string(c.slots[2]) + "," + std::to_string(c.slots[3]) + ")";
    }
    for (int i = 0; i < d.free_loops; ++i) {
        if (!out.empty())
            out += " ";
        out += "O";
    }
    return out;
}

}  // namespace statefiber
