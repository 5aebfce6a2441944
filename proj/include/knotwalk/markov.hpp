#pragma once
// Tangle Markov chains: finite state sets with rational-function transition
// weights, Green's matrices, contraction of a subregion, and the
// brute-force oracles (walk sums, multicycle identities) used to
// cross-check the determinant machinery.
//
// The Cartier-Foata identity states that det(I - A) equals the signed sum
// of the weights of all simple multicycles (vertex-disjoint collections of
// simple cycles, including the empty one).  The bad-multicycle oracle
// checks the cancellation that drives contraction invariance: summing
// (-1)^{|q|} a_circ(q) over multicycles whose "bad set" (edges used more
// than once, plus vertices that start more than one edge occurrence) is
// nonempty and contained in an acyclic region U gives exactly zero.
// Both enumerations are exhaustive and guarded by a hard state-count
// limit: oracles fail loudly rather than truncate.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotwalk/diagram.hpp"
#include "knotwalk/matrix.hpp"

namespace knotwalk {

struct TangleChain {
    std::vector<int> states;  // ordered, distinct labels
    RatMatrix transition;     // indexed by position in `states`
    std::vector<int> incoming;
    std::vector<int> outgoing;
};

inline std::size_t chain_index(const TangleChain& m, int label) {
    for (std::size_t i = 0; i < m.states.size(); ++i)
        if (m.states[i] == label) return i;
    throw std::invalid_argument("state label " + std::to_string(label) + " not in chain");
}

inline void validate_chain(const TangleChain& m) {
    if (m.transition.rows() != m.states.size() || m.transition.cols() != m.states.size())
        throw std::invalid_argument("chain transition matrix shape does not match state count");
    std::set<int> seen(m.states.begin(), m.states.end());
    if (seen.size() != m.states.size())
        throw std::invalid_argument("chain state labels are not distinct");
    for (int s : m.incoming) chain_index(m, s);
    for (int s : m.outgoing) chain_index(m, s);
}

inline TangleChain chain_from_diagram(const UprightDiagram& d) {
    TangleChain m;
    m.states.resize(static_cast<std::size_t>(d.strand_count));
    for (int s = 1; s <= d.strand_count; ++s) m.states[static_cast<std::size_t>(s) - 1] = s;
    m.transition = transition_matrix(d);
    m.incoming = {d.entry};
    m.outgoing = {d.exit};
    return m;
}

// The open (unclosed) braid as a chain: states are the strand segments,
// bottom segments are incoming, top segments outgoing.  The Green's entry
// from bottom position i to top position j equals burau(w)_{ij}.
inline TangleChain braid_chain(const BraidWord& w) {
    detail::BraidSweep sw = detail::sweep_braid(w);
    TangleChain m;
    m.states.resize(static_cast<std::size_t>(sw.node_count));
    for (int s = 0; s < sw.node_count; ++s) m.states[static_cast<std::size_t>(s)] = s + 1;
    PolyMatrix a(static_cast<std::size_t>(sw.node_count), static_cast<std::size_t>(sw.node_count));
    for (const detail::SegCrossing& c : sw.crossings) {
        const LaurentPoly ts = LaurentPoly::term(c.sign, 1);
        a.at(static_cast<std::size_t>(c.over_in), static_cast<std::size_t>(c.over_out)) += ts;
        a.at(static_cast<std::size_t>(c.over_in), static_cast<std::size_t>(c.under_out)) +=
            LaurentPoly::one() - ts;
        a.at(static_cast<std::size_t>(c.under_in), static_cast<std::size_t>(c.under_out)) +=
            LaurentPoly::one();
    }
    m.transition = RatMatrix::from_poly(a);
    for (int p = 1; p <= w.strand_count; ++p) {
        m.incoming.push_back(p);
        m.outgoing.push_back(sw.top[static_cast<std::size_t>(p)] + 1);
    }
    return m;
}

inline RatMatrix i_minus_a(const TangleChain& m) {
    return RatMatrix::identity(m.states.size()) - m.transition;
}

inline RatMatrix greens_matrix(const TangleChain& m) {
    validate_chain(m);
    return mat_inverse(i_minus_a(m));
}

// A region for contraction, as derived from a subset of a diagram's
// crossings: interior strands are consumed and produced inside the subset,
// inputs are consumed only, outputs produced only.
struct Region {
    std::vector<int> interior;
    std::vector<int> inputs;
    std::vector<int> outputs;
};

inline Region region_of_crossings(const UprightDiagram& d, const std::vector<std::size_t>& picks) {
    std::set<int> consumed, produced;
    for (std::size_t q : picks) {
        if (q >= d.crossings.size())
            throw std::invalid_argument("crossing index out of range for region");
        consumed.insert(d.crossings[q].over_in);
        consumed.insert(d.crossings[q].under_in);
        produced.insert(d.crossings[q].over_out);
        produced.insert(d.crossings[q].under_out);
    }
    Region r;
    for (int s : consumed)
        (produced.count(s) ? r.interior : r.inputs).push_back(s);
    for (int s : produced)
        if (!consumed.count(s)) r.outputs.push_back(s);
    return r;
}

inline TangleChain contract(const TangleChain& m, const std::vector<int>& interior,
                            const std::vector<int>& inputs, const std::vector<int>& outputs) {
    validate_chain(m);
    std::set<int> u(interior.begin(), interior.end());
    std::set<int> in(inputs.begin(), inputs.end());
    std::set<int> out(outputs.begin(), outputs.end());
    for (int s : u) {
        chain_index(m, s);
        if (in.count(s) || out.count(s))
            throw std::invalid_argument("region interior overlaps its boundary sets");
    }
    for (int s : in) chain_index(m, s);
    for (int s : out) chain_index(m, s);
    for (int s : m.incoming)
        if (u.count(s)) throw std::invalid_argument("region interior contains a chain boundary state");
    for (int s : m.outgoing)
        if (u.count(s)) throw std::invalid_argument("region interior contains a chain boundary state");

    // Leak check: interior states may talk to the outside only via I/O.
    for (std::size_t a = 0; a < m.states.size(); ++a) {
        for (std::size_t b = 0; b < m.states.size(); ++b) {
            if (m.transition.at(a, b).is_zero()) continue;
            int sa = m.states[a], sb = m.states[b];
            if (u.count(sb) && !u.count(sa) && !in.count(sa))
                throw std::invalid_argument("region leak: state " + std::to_string(sa) +
                                            " enters the interior without being an input");
            if (u.count(sa) && !u.count(sb) && !out.count(sb))
                throw std::invalid_argument("region leak: interior state " + std::to_string(sa) +
                                            " exits to " + std::to_string(sb) +
                                            " which is not an output");
        }
    }

    // Restricted chain on I ∪ U ∪ O, in the ambient state order.  Only the
    // region's own edges participate: source in I ∪ U, target in U ∪ O.
    // Ambient edges between boundary states that belong to the surrounding
    // chain (e.g. output -> input through the outside) must not leak in, or
    // the region Green's function would count walks leaving the region.
    std::vector<std::size_t> restricted;
    for (std::size_t a = 0; a < m.states.size(); ++a) {
        int s = m.states[a];
        if (u.count(s) || in.count(s) || out.count(s)) restricted.push_back(a);
    }
    RatMatrix mr(restricted.size(), restricted.size());
    for (std::size_t a = 0; a < restricted.size(); ++a)
        for (std::size_t b = 0; b < restricted.size(); ++b) {
            int sa = m.states[restricted[a]], sb = m.states[restricted[b]];
            const bool region_edge =
                (u.count(sa) || in.count(sa)) && (u.count(sb) || out.count(sb));
            RatFun v = region_edge ? -m.transition.at(restricted[a], restricted[b]) : RatFun();
            if (a == b) v += RatFun::one();
            mr.at(a, b) = v;
        }
    RatMatrix gr = mat_inverse(mr);
    auto restricted_pos = [&](int label) {
        for (std::size_t a = 0; a < restricted.size(); ++a)
            if (m.states[restricted[a]] == label) return a;
        throw std::logic_error("restricted index lookup failed");
    };

    TangleChain res;
    std::vector<std::size_t> keep;
    for (std::size_t a = 0; a < m.states.size(); ++a)
        if (!u.count(m.states[a])) {
            keep.push_back(a);
            res.states.push_back(m.states[a]);
        }
    res.transition = RatMatrix(keep.size(), keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
            res.transition.at(a, b) = m.transition.at(keep[a], keep[b]);
    for (int s : inputs)
        for (int t : outputs) {
            std::size_t a = 0, b = 0;
            for (std::size_t x = 0; x < res.states.size(); ++x) {
                if (res.states[x] == s) a = x;
                if (res.states[x] == t) b = x;
            }
            res.transition.at(a, b) = gr.at(restricted_pos(s), restricted_pos(t));
        }
    res.incoming = m.incoming;
    res.outgoing = m.outgoing;
    return res;
}

// True when the induced support subgraph on `subset` has a directed cycle.
inline bool region_has_cycle(const TangleChain& m, const std::vector<int>& subset) {
    std::set<int> u(subset.begin(), subset.end());
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < m.states.size(); ++a)
        if (u.count(m.states[a])) idx.push_back(a);
    // Three-color depth-first search: 0 unseen, 1 on stack, 2 done.
    std::map<std::size_t, int> color;
    bool found = false;
    std::function<void(std::size_t)> dfs = [&](std::size_t v) {
        color[v] = 1;
        for (std::size_t w : idx) {
            if (found) return;
            if (m.transition.at(v, w).is_zero()) continue;
            if (color[w] == 1) {
                found = true;
                return;
            }
            if (color[w] == 0) dfs(w);
        }
        color[v] = 2;
    };
    for (std::size_t start : idx) {
        if (found) break;
        if (color[start] == 0) dfs(start);
    }
    return found;
}

inline std::pair<RatFun, RatFun> det_after_contract(const TangleChain& m,
                                                    const std::vector<int>& interior,
                                                    const std::vector<int>& inputs,
                                                    const std::vector<int>& outputs) {
    if (region_has_cycle(m, interior))
        throw std::invalid_argument(
            "contraction region admits a cycle; the determinant identity is not guaranteed");
    RatFun before = mat_det(i_minus_a(m));
    TangleChain c = contract(m, interior, inputs, outputs);
    RatFun after = mat_det(i_minus_a(c));
    return {before, after};
}

// Numeric partial walk sum: all walks from s to t of length <= max_len,
// each weighted by the product of its transition weights evaluated at `at`.
inline double walk_sum_oracle(const TangleChain& m, int s, int t, int max_len, const Rat& at) {
    validate_chain(m);
    const std::size_t n = m.states.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!m.transition.at(i, j).is_zero())
                a[i][j] = m.transition.at(i, j).evaluate(at).convert_to<double>();
    const std::size_t si = chain_index(m, s), ti = chain_index(m, t);
    std::vector<double> cur(n, 0.0);
    cur[si] = 1.0;
    double acc = (si == ti) ? 1.0 : 0.0;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<double> next(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (cur[i] == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (a[i][j] != 0.0) next[j] += cur[i] * a[i][j];
        }
        acc += next[ti];
        cur = std::move(next);
    }
    return acc;
}

struct Multicycle {
    // Each cycle is a sequence of state labels in cyclic order, stored
    // rotated so its smallest label comes first; cycles sorted.
    std::vector<std::vector<int>> cycles;

    bool operator==(const Multicycle& o) const { return cycles == o.cycles; }
    bool operator<(const Multicycle& o) const { return cycles < o.cycles; }
};

inline Multicycle canonical_multicycle(std::vector<std::vector<int>> cycles) {
    for (auto& c : cycles) {
        auto mn = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), mn, c.end());
    }
    std::sort(cycles.begin(), cycles.end());
    return Multicycle{std::move(cycles)};
}

inline RatFun multicycle_weight(const TangleChain& m, const Multicycle& q) {
    RatFun w = RatFun::one();
    for (const auto& c : q.cycles)
        for (std::size_t k = 0; k < c.size(); ++k)
            w *= m.transition.at(chain_index(m, c[k]), chain_index(m, c[(k + 1) % c.size()]));
    return w;
}

namespace detail {

constexpr std::size_t kMulticycleStateGuard = 16;

inline void check_state_guard(const TangleChain& m) {
    if (m.states.size() > kMulticycleStateGuard)
        throw std::invalid_argument("chain has " + std::to_string(m.states.size()) +
                                    " states; exhaustive multicycle search is guarded at " +
                                    std::to_string(kMulticycleStateGuard));
}

// All simple cycles, as index sequences whose smallest index comes first.
inline std::vector<std::vector<std::size_t>> simple_cycles(const TangleChain& m) {
    const std::size_t n = m.states.size();
    std::vector<std::vector<std::size_t>> cycles;
    std::vector<std::size_t> path;
    std::vector<bool> on_path(n, false);
    auto edge = [&](std::size_t i, std::size_t j) { return !m.transition.at(i, j).is_zero(); };
    // Cycles whose minimal index is `start` use only indices >= start.
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t v) {
        for (std::size_t w = start; w < n; ++w) {
            if (!edge(v, w)) continue;
            if (w == start) {
                cycles.push_back(path);
            } else if (!on_path[w]) {
                path.push_back(w);
                on_path[w] = true;
                dfs(start, w);
                on_path[w] = false;
                path.pop_back();
            }
        }
    };
    for (std::size_t start = 0; start < n; ++start) {
        path = {start};
        on_path.assign(n, false);
        on_path[start] = true;
        dfs(start, start);
    }
    return cycles;
}

}  // namespace detail

inline std::vector<Multicycle> enumerate_simple_multicycles(const TangleChain& m) {
    validate_chain(m);
    detail::check_state_guard(m);
    std::vector<std::vector<std::size_t>> cycles = detail::simple_cycles(m);
    std::vector<unsigned> masks;
    masks.reserve(cycles.size());
    for (const auto& c : cycles) {
        unsigned mask = 0;
        for (std::size_t v : c) mask |= (1u << v);
        masks.push_back(mask);
    }
    std::vector<Multicycle> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t from, unsigned used) {
        std::vector<std::vector<int>> labeled;
        labeled.reserve(chosen.size());
        for (std::size_t ci : chosen) {
            std::vector<int> lab;
            for (std::size_t v : cycles[ci]) lab.push_back(m.states[v]);
            labeled.push_back(std::move(lab));
        }
        out.push_back(canonical_multicycle(std::move(labeled)));
        for (std::size_t ci = from; ci < cycles.size(); ++ci) {
            if (masks[ci] & used) continue;
            chosen.push_back(ci);
            rec(ci + 1, used | masks[ci]);
            chosen.pop_back();
        }
    };
    rec(0, 0u);
    std::sort(out.begin(), out.end());
    return out;
}

// (signed multicycle sum, det(I - A)) — equal by the trace-monoid identity.
inline std::pair<RatFun, RatFun> cartier_foata_check(const TangleChain& m) {
    std::vector<Multicycle> qs = enumerate_simple_multicycles(m);
    RatFun sum;
    for (const Multicycle& q : qs) {
        RatFun w = multicycle_weight(m, q);
        if (q.cycles.size() % 2 == 1) w = -w;
        sum += w;
    }
    return {sum, mat_det(i_minus_a(m))};
}

namespace detail {

struct Excursion {
    std::size_t from, to;                                    // outside indices
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // full edge list
};

}  // namespace detail

// Signed sum over multicycles whose bad set is nonempty and contained in
// the acyclic region U; always zero (transposition cancellation).  Cycles
// here may repeat interior vertices and edges; outside U every vertex is
// visited at most once, which keeps the enumeration finite.  When
// `qualifying_count` is given it receives the number of multicycles that
// entered the sum, so callers can tell cancellation from vacuity.
inline RatFun bad_multicycle_sum(const TangleChain& m, const std::vector<int>& region,
                                 std::size_t* qualifying_count = nullptr) {
    validate_chain(m);
    detail::check_state_guard(m);
    if (region_has_cycle(m, region))
        throw std::invalid_argument("bad-multicycle region must be acyclic");
    const std::size_t n = m.states.size();
    std::set<int> u_labels(region.begin(), region.end());
    for (int s : region) chain_index(m, s);
    std::vector<bool> in_u(n, false);
    for (std::size_t i = 0; i < n; ++i) in_u[i] = u_labels.count(m.states[i]) != 0;
    auto edge = [&](std::size_t i, std::size_t j) { return !m.transition.at(i, j).is_zero(); };

    // Excursions between outside vertices: a direct edge, or a simple path
    // through interior vertices (interior walks cannot repeat vertices
    // because U is acyclic).
    std::vector<detail::Excursion> exc;
    for (std::size_t x = 0; x < n; ++x) {
        if (in_u[x]) continue;
        // Direct edges.
        for (std::size_t y = 0; y < n; ++y)
            if (!in_u[y] && edge(x, y)) exc.push_back({x, y, {{x, y}}});
        // Paths through U.
        std::vector<std::size_t> path;  // interior vertices only
        std::vector<bool> used(n, false);
        std::function<void(std::size_t)> dfs = [&](std::size_t v) {
            for (std::size_t w = 0; w < n; ++w) {
                if (!edge(v, w)) continue;
                if (in_u[w]) {
                    if (used[w]) continue;
                    used[w] = true;
                    path.push_back(w);
                    dfs(w);
                    path.pop_back();
                    used[w] = false;
                } else if (!path.empty()) {
                    detail::Excursion e;
                    e.from = x;
                    e.to = w;
                    std::size_t prev = x;
                    for (std::size_t p : path) {
                        e.edges.push_back({prev, p});
                        prev = p;
                    }
                    e.edges.push_back({prev, w});
                    exc.push_back(std::move(e));
                }
            }
        };
        dfs(x);
    }

    // Cycles: closed chains of excursions over distinct outside vertices,
    // the smallest of which is the anchor.  Each cycle records its full
    // edge list (multiplicities matter for the bad set).
    struct Cycle {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        unsigned outside_mask;
    };
    std::vector<Cycle> cycles;
    {
        std::vector<const detail::Excursion*> chain_exc;
        std::function<void(std::size_t, std::size_t, unsigned)> grow =
            [&](std::size_t anchor, std::size_t at, unsigned mask) {
                for (const detail::Excursion& e : exc) {
                    if (e.from != at) continue;
                    if (e.to == anchor) {
                        Cycle c;
                        c.outside_mask = mask;
                        for (const detail::Excursion* pe : chain_exc)
                            for (auto& ed : pe->edges) c.edges.push_back(ed);
                        for (auto& ed : e.edges) c.edges.push_back(ed);
                        cycles.push_back(std::move(c));
                    } else if (e.to > anchor && !(mask & (1u << e.to))) {
                        chain_exc.push_back(&e);
                        grow(anchor, e.to, mask | (1u << e.to));
                        chain_exc.pop_back();
                    }
                }
            };
        for (std::size_t anchor = 0; anchor < n; ++anchor) {
            if (in_u[anchor]) continue;
            chain_exc.clear();
            grow(anchor, anchor, 1u << anchor);
        }
    }

    // Multicycles: sets of cycles with disjoint outside supports; keep
    // those whose bad set is nonempty and contained in U.
    RatFun total;
    std::size_t qualifying = 0;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t from, unsigned used) {
        if (!chosen.empty()) {
            std::map<std::pair<std::size_t, std::size_t>, int> mult;
            std::vector<int> out_mult(n, 0);
            for (std::size_t ci : chosen)
                for (auto& ed : cycles[ci].edges) {
                    ++mult[ed];
                    ++out_mult[ed.first];
                }
            bool bad_nonempty = false;
            bool bad_inside_u = true;
            for (auto& [ed, k] : mult)
                if (k > 1) {
                    bad_nonempty = true;
                    if (!in_u[ed.first] || !in_u[ed.second]) bad_inside_u = false;
                }
            for (std::size_t v = 0; v < n; ++v)
                if (out_mult[v] > 1) {
                    bad_nonempty = true;
                    if (!in_u[v]) bad_inside_u = false;
                }
            if (bad_nonempty && bad_inside_u) {
                ++qualifying;
                RatFun w = RatFun::one();
                for (std::size_t ci : chosen)
                    for (auto& ed : cycles[ci].edges)
                        w *= m.transition.at(ed.first, ed.second);
                if (chosen.size() % 2 == 1) w = -w;
                total += w;
            }
        }
        for (std::size_t ci = from; ci < cycles.size(); ++ci) {
            if (cycles[ci].outside_mask & used) continue;
            chosen.push_back(ci);
            rec(ci + 1, used | cycles[ci].outside_mask);
            chosen.pop_back();
        }
    };
    rec(0, 0u);
    if (qualifying_count) *qualifying_count = qualifying;
    return total;
}

// A free-standing infinite-twist vertex on n strands: inputs 1..n, outputs
// n+1..2n, weight a(i, n+j) = T^{j-1} / (1 + T + ... + T^{n-1}).
inline TangleChain infinite_twist_vertex(int n) {
    if (n < 2) throw std::invalid_argument("infinite twist vertex needs at least 2 strands");
    TangleChain m;
    const std::size_t nn = static_cast<std::size_t>(n);
    m.states.resize(2 * nn);
    for (std::size_t s = 0; s < 2 * nn; ++s) m.states[s] = static_cast<int>(s) + 1;
    m.transition = RatMatrix(2 * nn, 2 * nn);
    const LaurentPoly den = twist_denominator(n);
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            m.transition.at(i, nn + j) = RatFun(LaurentPoly::term(static_cast<long long>(j), 1), den);
    for (std::size_t i = 0; i < nn; ++i) {
        m.incoming.push_back(static_cast<int>(i) + 1);
        m.outgoing.push_back(static_cast<int>(nn + i) + 1);
    }
    return m;
}

}  // namespace knotwalk
