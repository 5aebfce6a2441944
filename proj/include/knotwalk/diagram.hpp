#pragma once
// Upright long-knot diagrams: crossings with explicit in/out strand labels,
// per-strand turning numbers, and the compiler from braid closures.
//
// A diagram is a single open component: every strand label is consumed by
// exactly one crossing (as an over- or under-input), except the exit
// strand, and produced by exactly one crossing, except the entry strand.
// The transition matrix sends each crossing (sign s, over i -> i+, under
// j -> j+) to the weights
//     a(i, i+) = T^s,   a(i, j+) = 1 - T^s,   a(j, j+) = 1,
// so rows of strands that reach the exit without re-entering a crossing
// stay zero.
//
// Layout convention for braid closures (frozen by the regression tests):
// the braid is drawn upward with positions 1..m; the closure arc at
// position p is routed to the left of the braid when p is left of the cut
// (turning +1) and to the right otherwise (turning -1); the two loose ends
// at the cut position run straight down/up and contribute no turning.
// Strand labels are assigned in traversal order from the entry, so labels
// run 1..2L+1 along the knot.

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotwalk/braid.hpp"
#include "knotwalk/matrix.hpp"

namespace knotwalk {

struct Crossing {
    int sign = 1;    // +1 or -1
    int over_in = 0;   // i
    int under_in = 0;  // j
    int over_out = 0;  // i+
    int under_out = 0; // j+
};

struct UprightDiagram {
    int strand_count = 1;
    std::vector<Crossing> crossings;
    std::map<int, int> rotations;  // strand label -> turning number; absent = 0
    int entry = 1;
    int exit = 1;
};

inline UprightDiagram unknot_diagram() { return UprightDiagram{}; }

inline int writhe(const UprightDiagram& d) {
    int w = 0;
    for (const Crossing& c : d.crossings) w += c.sign;
    return w;
}

inline int rotation_of(const UprightDiagram& d, int strand) {
    auto it = d.rotations.find(strand);
    return it == d.rotations.end() ? 0 : it->second;
}

inline int rotation_total(const UprightDiagram& d) {
    int phi = 0;
    for (const auto& [k, v] : d.rotations) phi += v;
    return phi;
}

inline void validate(const UprightDiagram& d) {
    const int n = d.strand_count;
    if (n < 1) throw std::invalid_argument("diagram needs at least one strand");
    auto check_label = [&](int s, const char* what) {
        if (s < 1 || s > n)
            throw std::invalid_argument(std::string(what) + " label " + std::to_string(s) +
                                        " outside 1.." + std::to_string(n));
    };
    check_label(d.entry, "entry");
    check_label(d.exit, "exit");
    for (const auto& [k, v] : d.rotations) check_label(k, "rotation");

    std::vector<int> in_count(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> out_count(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> succ(static_cast<std::size_t>(n) + 1, 0);
    for (const Crossing& c : d.crossings) {
        if (c.sign != 1 && c.sign != -1)
            throw std::invalid_argument("crossing sign must be +1 or -1");
        check_label(c.over_in, "crossing");
        check_label(c.under_in, "crossing");
        check_label(c.over_out, "crossing");
        check_label(c.under_out, "crossing");
        if (c.over_in == c.under_in)
            throw std::invalid_argument("crossing consumes the same strand twice");
        if (c.over_out == c.under_out)
            throw std::invalid_argument("crossing produces the same strand twice");
        ++in_count[static_cast<std::size_t>(c.over_in)];
        ++in_count[static_cast<std::size_t>(c.under_in)];
        ++out_count[static_cast<std::size_t>(c.over_out)];
        ++out_count[static_cast<std::size_t>(c.under_out)];
        succ[static_cast<std::size_t>(c.over_in)] = c.over_out;
        succ[static_cast<std::size_t>(c.under_in)] = c.under_out;
    }
    for (int s = 1; s <= n; ++s) {
        int want_in = (s == d.exit) ? 0 : 1;
        int want_out = (s == d.entry) ? 0 : 1;
        if (in_count[static_cast<std::size_t>(s)] != want_in)
            throw std::invalid_argument("strand " + std::to_string(s) +
                                        " is consumed " +
                                        std::to_string(in_count[static_cast<std::size_t>(s)]) +
                                        " times (expected " + std::to_string(want_in) + ")");
        if (out_count[static_cast<std::size_t>(s)] != want_out)
            throw std::invalid_argument("strand " + std::to_string(s) + " is produced " +
                                        std::to_string(out_count[static_cast<std::size_t>(s)]) +
                                        " times (expected " + std::to_string(want_out) + ")");
    }
    // Walk the component from entry to exit; it must visit every strand.
    int visited = 1;
    int s = d.entry;
    while (s != d.exit) {
        s = succ[static_cast<std::size_t>(s)];
        ++visited;
        if (visited > n)
            throw std::invalid_argument("strand successor walk does not terminate");
    }
    if (visited != n)
        throw std::invalid_argument("crossing data traces " + std::to_string(visited) +
                                    " of " + std::to_string(n) +
                                    " strands: not a single long component");
}

inline PolyMatrix transition_matrix_poly(const UprightDiagram& d) {
    validate(d);
    const std::size_t n = static_cast<std::size_t>(d.strand_count);
    PolyMatrix a(n, n);
    for (const Crossing& c : d.crossings) {
        const LaurentPoly ts = LaurentPoly::term(c.sign, 1);
        std::size_t i = static_cast<std::size_t>(c.over_in) - 1;
        std::size_t j = static_cast<std::size_t>(c.under_in) - 1;
        std::size_t ip = static_cast<std::size_t>(c.over_out) - 1;
        std::size_t jp = static_cast<std::size_t>(c.under_out) - 1;
        a.at(i, ip) += ts;
        a.at(i, jp) += LaurentPoly::one() - ts;
        a.at(j, jp) += LaurentPoly::one();
    }
    return a;
}

inline RatMatrix transition_matrix(const UprightDiagram& d) {
    return RatMatrix::from_poly(transition_matrix_poly(d));
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Node-level crossing produced while sweeping a braid word upward.
struct SegCrossing {
    int sign;
    int over_in, under_in, over_out, under_out;  // segment node ids
};

// Sweep the word bottom to top, producing one crossing per letter and the
// segment ids left open at the top.  Node ids: 0..m-1 are the bottom
// segments of positions 1..m; each letter creates nodes m+2q (new segment
// at its left position) and m+2q+1 (right position).
struct BraidSweep {
    int node_count = 0;
    std::vector<SegCrossing> crossings;
    std::vector<int> top;  // top[p] = open node at position p (1-based)
};

inline BraidSweep sweep_braid(const BraidWord& w) {
    validate_braid(w);
    const int m = w.strand_count;
    BraidSweep sw;
    sw.top.assign(static_cast<std::size_t>(m) + 1, 0);
    for (int p = 1; p <= m; ++p) sw.top[static_cast<std::size_t>(p)] = p - 1;
    int next_id = m;
    for (int letter : w.letters) {
        const int k = letter > 0 ? letter : -letter;
        const int left = sw.top[static_cast<std::size_t>(k)];
        const int right = sw.top[static_cast<std::size_t>(k) + 1];
        const int new_left = next_id++;
        const int new_right = next_id++;
        SegCrossing c;
        c.sign = letter > 0 ? 1 : -1;
        if (letter > 0) {
            c.over_in = left;
            c.under_in = right;
            c.over_out = new_right;
            c.under_out = new_left;
        } else {
            c.over_in = right;
            c.under_in = left;
            c.over_out = new_left;
            c.under_out = new_right;
        }
        sw.crossings.push_back(c);
        sw.top[static_cast<std::size_t>(k)] = new_left;
        sw.top[static_cast<std::size_t>(k) + 1] = new_right;
    }
    sw.node_count = next_id;
    return sw;
}

}  // namespace detail

inline UprightDiagram braid_closure_to_long(const BraidWord& w, int cut) {
    validate_braid(w);
    const int m = w.strand_count;
    if (cut < 1 || cut > m)
        throw std::invalid_argument("cut strand " + std::to_string(cut) + " outside 1.." +
                                    std::to_string(m));
    if (!closure_is_knot(w))
        throw std::invalid_argument("closure of the braid word is a link, not a knot");

    detail::BraidSweep sw = detail::sweep_braid(w);
    detail::UnionFind uf(sw.node_count);
    for (int p = 1; p <= m; ++p)
        if (p != cut) uf.unite(sw.top[static_cast<std::size_t>(p)], p - 1);

    std::map<int, int> turning;  // root node -> closure-arc turning
    for (int p = 1; p <= m; ++p)
        if (p != cut) turning[uf.find(p - 1)] += (p < cut) ? 1 : -1;

    const int entry_node = uf.find(cut - 1);
    const int exit_node = uf.find(sw.top[static_cast<std::size_t>(cut)]);

    // Which crossing consumes each merged segment, and in which role.
    std::map<int, std::pair<std::size_t, bool>> consumer;  // root -> (index, is_over)
    for (std::size_t q = 0; q < sw.crossings.size(); ++q) {
        consumer[uf.find(sw.crossings[q].over_in)] = {q, true};
        consumer[uf.find(sw.crossings[q].under_in)] = {q, false};
    }

    // Assign labels 1.. along the knot from entry to exit.
    std::map<int, int> label;
    int next_label = 1;
    int node = entry_node;
    const int total_strands = 2 * static_cast<int>(w.letters.size()) + 1;
    while (true) {
        label[node] = next_label++;
        if (node == exit_node) break;
        auto it = consumer.find(node);
        if (it == consumer.end() || next_label > total_strands + 1)
            throw std::logic_error("braid closure trace failed to reach the exit strand");
        const detail::SegCrossing& c = sw.crossings[it->second.first];
        node = uf.find(it->second.second ? c.over_out : c.under_out);
    }
    if (next_label != total_strands + 1)
        throw std::logic_error("braid closure trace missed strands");

    UprightDiagram d;
    d.strand_count = total_strands;
    d.entry = label.at(entry_node);
    d.exit = label.at(exit_node);
    for (const detail::SegCrossing& c : sw.crossings) {
        Crossing out;
        out.sign = c.sign;
        out.over_in = label.at(uf.find(c.over_in));
        out.under_in = label.at(uf.find(c.under_in));
        out.over_out = label.at(uf.find(c.over_out));
        out.under_out = label.at(uf.find(c.under_out));
        d.crossings.push_back(out);
    }
    for (const auto& [root, t] : turning)
        if (t != 0) d.rotations[label.at(root)] = t;
    validate(d);
    return d;
}

}  // namespace knotwalk
