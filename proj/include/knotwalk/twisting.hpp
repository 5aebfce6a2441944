#pragma once
// Coherently oriented twisted families: a braid sandwich
//     prefix · (full twist on a strand slot)^t · suffix
// closed to a long knot at a cut strand.  The module builds the finite-t
// diagrams, the two limiting chains (slot replaced by an infinite-twist
// vertex, and by vertex–full-twist–vertex), and from them the limit of the
// normalized Alexander polynomials and the asymptotic growth rate of the
// perturbed invariant, both as exact rational functions.
//
// The limit statements under the hood:
//   lim_t T^{t n(n-1)/2} Δ(K_t)   = T^{(-φ₀-w₀)/2} det(I - A_∞)
//   lim_t d_t                     = T^{-φ₀-w₀} Σ_k R̃₁(c_k(τ_∞))
// where d_t = T^{t n(n-1)} ( T^{n(n-1)} ρ₁(K_{t+1}) − ρ₁(K_t) ), φ₀ and w₀
// are the rotation total and writhe of the t = 0 diagram, and the τ_∞
// crossings are the n(n-1) positive crossings of one full twist framed by
// the two infinite-twist vertices.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotwalk/braid.hpp"
#include "knotwalk/diagram.hpp"
#include "knotwalk/invariants.hpp"
#include "knotwalk/markov.hpp"
#include "knotwalk/matrix.hpp"
#include "knotwalk/series.hpp"

namespace knotwalk {

struct TwistedFamily {
    int m = 2;         // ambient braid strand count
    BraidWord prefix;  // braid on m strands (letters may be empty)
    BraidWord suffix;
    int slot_lo = 1;  // inclusive strand range that receives the twists
    int slot_hi = 2;
    int cut = 1;  // closure cut strand
};

inline int slot_width(const TwistedFamily& f) { return f.slot_hi - f.slot_lo + 1; }

inline BraidWord word_at(const TwistedFamily& f, int t) {
    if (t < 0) throw std::invalid_argument("twist count must be nonnegative");
    BraidWord w{f.m, f.prefix.letters};
    const BraidWord twist = full_twist_word(slot_width(f));
    for (int rep = 0; rep < t; ++rep)
        for (int letter : twist.letters)
            w.letters.push_back(letter > 0 ? letter + (f.slot_lo - 1)
                                           : letter - (f.slot_lo - 1));
    w.letters.insert(w.letters.end(), f.suffix.letters.begin(), f.suffix.letters.end());
    return w;
}

inline void validate_family(const TwistedFamily& f) {
    if (f.m < 2) throw std::invalid_argument("family needs at least 2 ambient strands");
    if (f.slot_lo < 1 || f.slot_hi <= f.slot_lo || f.slot_hi > f.m)
        throw std::invalid_argument("twist slot must be a strand range of width >= 2 inside the braid");
    if (f.cut < 1 || f.cut > f.m) throw std::invalid_argument("cut strand outside the braid");
    if (f.prefix.strand_count != f.m || f.suffix.strand_count != f.m)
        throw std::invalid_argument("prefix/suffix must be braids on the ambient strand count");
    validate_braid(word_at(f, 0));
    // The full twist is a pure braid, so knot-ness at t = 0 decides every t;
    // t = 1 is checked anyway as a cheap consistency guard.
    if (!closure_is_knot(word_at(f, 0)) || !closure_is_knot(word_at(f, 1)))
        throw std::invalid_argument("family closure is a link, not a knot");
}

inline UprightDiagram diagram_at(const TwistedFamily& f, int t) {
    validate_family(f);
    return braid_closure_to_long(word_at(f, t), f.cut);
}

struct TauChain {
    TangleChain chain;
    std::vector<Crossing> tau;  // the full-twist crossings, bottom to top
};

namespace detail {

// Sweep prefix, an infinite-twist vertex on the slot, optionally one full
// twist followed by a second vertex, then suffix; close at the cut and
// relabel states along the knot trace.  The trace passes a vertex from
// input position k to output position k (the identity connection, matching
// the t = 0 strand flow).
inline TauChain build_vertex_chain(const TwistedFamily& f, bool include_tau) {
    validate_family(f);
    const int m = f.m;
    const int n = slot_width(f);

    std::vector<SegCrossing> crossings;
    std::vector<std::pair<std::size_t, std::size_t>> tau_range;  // [begin, end) in crossings
    struct VertexRec {
        std::vector<int> ins, outs;  // node ids by slot position
    };
    std::vector<VertexRec> vertices;

    std::vector<int> top(static_cast<std::size_t>(m) + 1, 0);
    for (int p = 1; p <= m; ++p) top[static_cast<std::size_t>(p)] = p - 1;
    int next_id = m;

    auto sweep_letters = [&](const std::vector<int>& letters) {
        for (int letter : letters) {
            const int k = letter > 0 ? letter : -letter;
            const int left = top[static_cast<std::size_t>(k)];
            const int right = top[static_cast<std::size_t>(k) + 1];
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
            crossings.push_back(c);
            top[static_cast<std::size_t>(k)] = new_left;
            top[static_cast<std::size_t>(k) + 1] = new_right;
        }
    };
    auto place_vertex = [&]() {
        VertexRec v;
        for (int p = f.slot_lo; p <= f.slot_hi; ++p)
            v.ins.push_back(top[static_cast<std::size_t>(p)]);
        for (int p = f.slot_lo; p <= f.slot_hi; ++p) {
            int node = next_id++;
            v.outs.push_back(node);
            top[static_cast<std::size_t>(p)] = node;
        }
        vertices.push_back(v);
    };

    sweep_letters(f.prefix.letters);
    place_vertex();
    if (include_tau) {
        const BraidWord twist = full_twist_word(n);
        std::vector<int> shifted;
        for (int letter : twist.letters)
            shifted.push_back(letter > 0 ? letter + (f.slot_lo - 1) : letter - (f.slot_lo - 1));
        const std::size_t begin = crossings.size();
        sweep_letters(shifted);
        tau_range = {{begin, crossings.size()}};
        place_vertex();
    }
    sweep_letters(f.suffix.letters);

    // Close all positions except the cut.
    UnionFind uf(next_id);
    for (int p = 1; p <= m; ++p)
        if (p != f.cut) uf.unite(top[static_cast<std::size_t>(p)], p - 1);
    const int entry_node = uf.find(f.cut - 1);
    const int exit_node = uf.find(top[static_cast<std::size_t>(f.cut)]);

    // Consumers of merged segments: crossings (over/under role) or a vertex
    // input position.
    struct Consumer {
        enum Kind { kOver, kUnder, kVertex } kind;
        std::size_t index;  // crossing index or vertex index
        int pos = 0;        // vertex input position
    };
    std::map<int, Consumer> consumer;
    for (std::size_t q = 0; q < crossings.size(); ++q) {
        consumer[uf.find(crossings[q].over_in)] = {Consumer::kOver, q, 0};
        consumer[uf.find(crossings[q].under_in)] = {Consumer::kUnder, q, 0};
    }
    for (std::size_t v = 0; v < vertices.size(); ++v)
        for (std::size_t k = 0; k < vertices[v].ins.size(); ++k)
            consumer[uf.find(vertices[v].ins[k])] = {Consumer::kVertex, v, static_cast<int>(k)};

    const int total_states = next_id - (m - 1);
    std::map<int, int> label;
    int next_label = 1;
    int node = entry_node;
    while (true) {
        label[node] = next_label++;
        if (node == exit_node) break;
        auto it = consumer.find(node);
        if (it == consumer.end() || next_label > total_states + 1)
            throw std::logic_error("vertex-chain trace failed to reach the exit strand");
        const Consumer& c = it->second;
        if (c.kind == Consumer::kVertex)
            node = uf.find(vertices[c.index].outs[static_cast<std::size_t>(c.pos)]);
        else
            node = uf.find(c.kind == Consumer::kOver ? crossings[c.index].over_out
                                                     : crossings[c.index].under_out);
    }
    if (next_label != total_states + 1)
        throw std::logic_error("vertex-chain trace missed states");

    TauChain out;
    TangleChain& ch = out.chain;
    ch.states.resize(static_cast<std::size_t>(total_states));
    for (int s = 1; s <= total_states; ++s) ch.states[static_cast<std::size_t>(s) - 1] = s;
    ch.transition = RatMatrix(static_cast<std::size_t>(total_states),
                              static_cast<std::size_t>(total_states));
    auto lab = [&](int node_id) { return label.at(uf.find(node_id)); };
    auto entry_at = [&](int from_label, int to_label) -> RatFun& {
        return ch.transition.at(static_cast<std::size_t>(from_label) - 1,
                                static_cast<std::size_t>(to_label) - 1);
    };
    for (const SegCrossing& c : crossings) {
        const LaurentPoly ts = LaurentPoly::term(c.sign, 1);
        entry_at(lab(c.over_in), lab(c.over_out)) += RatFun(ts);
        entry_at(lab(c.over_in), lab(c.under_out)) += RatFun(LaurentPoly::one() - ts);
        entry_at(lab(c.under_in), lab(c.under_out)) += RatFun::one();
    }
    const LaurentPoly den = twist_denominator(n);
    for (const VertexRec& v : vertices)
        for (std::size_t i = 0; i < v.ins.size(); ++i)
            for (std::size_t j = 0; j < v.outs.size(); ++j)
                entry_at(lab(v.ins[i]), lab(v.outs[j])) +=
                    RatFun(LaurentPoly::term(static_cast<long long>(j), 1), den);
    ch.incoming = {label.at(entry_node)};
    ch.outgoing = {label.at(exit_node)};

    for (const auto& [begin, end] : tau_range)
        for (std::size_t q = begin; q < end; ++q) {
            const SegCrossing& c = crossings[q];
            Crossing t;
            t.sign = c.sign;
            t.over_in = lab(c.over_in);
            t.under_in = lab(c.under_in);
            t.over_out = lab(c.over_out);
            t.under_out = lab(c.under_out);
            out.tau.push_back(t);
        }
    return out;
}

}  // namespace detail

inline TangleChain build_d_infinity(const TwistedFamily& f) {
    return detail::build_vertex_chain(f, false).chain;
}

inline TauChain build_d_tau_infinity(const TwistedFamily& f) {
    return detail::build_vertex_chain(f, true);
}

inline RatFun alexander_limit(const TwistedFamily& f) {
    UprightDiagram d0 = diagram_at(f, 0);
    const int shift2 = -rotation_total(d0) - writhe(d0);
    TangleChain ch = build_d_infinity(f);
    RatFun det = mat_det(i_minus_a(ch));
    return RatFun(LaurentPoly::term_half(shift2, 1)) * det;
}

inline RatFun growth_rate(const TwistedFamily& f) {
    UprightDiagram d0 = diagram_at(f, 0);
    const int shift = -rotation_total(d0) - writhe(d0);
    TauChain tc = build_d_tau_infinity(f);
    RatMatrix iA = i_minus_a(tc.chain);
    RatMatrix adj = mat_adjugate(iA);
    RatFun det = mat_det(iA);
    auto g = [&](int row_label, int col_label) -> const RatFun& {
        return adj.at(static_cast<std::size_t>(row_label) - 1,
                      static_cast<std::size_t>(col_label) - 1);
    };
    const RatFun half(Int(1), Int(2));
    RatFun sum;
    for (const Crossing& c : tc.tau) {
        const int i = c.over_in, j = c.under_in, jp = c.under_out;
        RatFun r = g(j, i) * (g(jp, j) + g(j, jp) - g(i, j)) -
                   g(i, i) * (g(j, jp) - det) - det * det * half;
        if (c.sign < 0) r = -r;
        sum += r;
    }
    return RatFun(LaurentPoly::term(shift, 1)) * sum;
}

inline LaurentPoly d_t_empirical(const TwistedFamily& f, int t) {
    if (t < 0) throw std::invalid_argument("twist count must be nonnegative");
    const int nn1 = slot_width(f) * (slot_width(f) - 1);
    LaurentPoly r_next = rho1(diagram_at(f, t + 1));
    LaurentPoly r_cur = rho1(diagram_at(f, t));
    return (r_next.shifted(nn1) - r_cur).shifted(static_cast<long long>(t) * nn1);
}

struct GrowthReport {
    RatFun limit;                         // growth rate of d_t
    RatFun alexander_limit_value;         // limit of normalized Alexander polynomials
    long long r0 = 0;                     // series cutoff used for depths
    std::vector<LaurentPoly> d_values;    // d_t for t = 0..t_max
    std::vector<long long> agreement_depth;  // per t, in [-1, r0]
    bool depths_nondecreasing = true;
    std::vector<LaurentPoly> rho1_values;  // ρ₁(K_t) for t = 0..t_max+1
    bool rho1_pairwise_distinct = true;
    long long alpha = 0;           // det(I - A_∞) = T^α · alexander_limit
    bool tau_det_matches = true;   // det(I - A_∞^τ) == det(I - A_∞)
};

inline GrowthReport convergence_report(const TwistedFamily& f, int t_max, long long r0) {
    if (t_max < 1) throw std::invalid_argument("convergence report needs t_max >= 1");
    GrowthReport rep;
    rep.r0 = r0;
    rep.limit = growth_rate(f);
    rep.alexander_limit_value = alexander_limit(f);

    const int nn1 = slot_width(f) * (slot_width(f) - 1);
    for (int t = 0; t <= t_max + 1; ++t)
        rep.rho1_values.push_back(rho1(diagram_at(f, t)));
    for (std::size_t a = 0; a < rep.rho1_values.size() && rep.rho1_pairwise_distinct; ++a)
        for (std::size_t b = a + 1; b < rep.rho1_values.size(); ++b)
            if (rep.rho1_values[a] == rep.rho1_values[b]) {
                rep.rho1_pairwise_distinct = false;
                break;
            }

    const TruncatedSeries limit_series = series_expand(rep.limit, r0);
    for (int t = 0; t <= t_max; ++t) {
        const LaurentPoly& rc = rep.rho1_values[static_cast<std::size_t>(t)];
        const LaurentPoly& rn = rep.rho1_values[static_cast<std::size_t>(t) + 1];
        LaurentPoly dt = (rn.shifted(nn1) - rc).shifted(static_cast<long long>(t) * nn1);
        rep.d_values.push_back(dt);
        rep.agreement_depth.push_back(
            series_agreement_depth(series_from_poly(dt, r0), limit_series));
    }
    for (std::size_t t = 1; t < rep.agreement_depth.size(); ++t)
        if (rep.agreement_depth[t] < rep.agreement_depth[t - 1]) rep.depths_nondecreasing = false;

    // det(I - A_∞) differs from the Alexander limit by a monomial T^α.
    TangleChain ch = build_d_infinity(f);
    RatFun det_inf = mat_det(i_minus_a(ch));
    if (rep.alexander_limit_value.is_zero())
        throw std::domain_error("alexander limit vanished; no monomial gap to measure");
    RatFun ratio = det_inf / rep.alexander_limit_value;
    if (!ratio.is_polynomial() || ratio.num().term_count() != 1 ||
        ratio.num().leading_coeff() != 1 || !ratio.num().integer_grain())
        throw std::domain_error("determinant/limit ratio is not a monomial in T");
    rep.alpha = ratio.num().max_exp2() / 2;
    RatFun det_tau = mat_det(i_minus_a(build_d_tau_infinity(f).chain));
    rep.tau_det_matches = (det_tau == det_inf);
    return rep;
}

// Depth to which the normalized finite-t Alexander polynomial
// T^{t n(n-1)/2} Δ(K_t) agrees with the series of the limit, per t.
inline std::vector<long long> alexander_limit_depths(const TwistedFamily& f, int t_max,
                                                     long long r0) {
    std::vector<long long> depths;
    const int nn1 = slot_width(f) * (slot_width(f) - 1);
    const TruncatedSeries limit_series = series_expand(alexander_limit(f), r0);
    for (int t = 0; t <= t_max; ++t) {
        LaurentPoly norm =
            alexander(diagram_at(f, t)).shifted(static_cast<long long>(t) * nn1 / 2);
        depths.push_back(series_agreement_depth(series_from_poly(norm, r0), limit_series));
    }
    return depths;
}

}  // namespace knotwalk
