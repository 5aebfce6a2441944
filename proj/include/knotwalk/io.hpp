#pragma once
// JSON (de)serialization and deterministic text rendering.
//
// JSON schemas (ordered objects; byte-identical across runs):
//   polynomial:  {"terms": [[exp_num, exp_den, coeff], ...]}  exp_den in {1,2},
//                ascending by exponent; coeff is a JSON number when |c| < 2^53,
//                otherwise a decimal string.
//   rational:    {"num": poly, "den": poly}
//   braid:       {"n": m, "word": [letters...]}
//   diagram:     {"strands": n, "entry": e, "exit": x,
//                 "crossings": [{"sign": s, "i": _, "j": _, "ip": _, "jp": _}...],
//                 "rotations": {"label": phi, ...}}
//   family:      {"m": _, "prefix": [...], "suffix": [...], "slot": [a, b], "cut": c}
//   chain:       {"states": [...], "matrix": [[rational...]...],
//                 "incoming": [...], "outgoing": [...]}
//   series:      {"min_exp": _, "cutoff": _, "coeffs": [...]}
//
// Text rendering is uniform and diff-friendly: polynomials print every term
// as `c*T^e` (half-integer exponents as `T^(k/2)`), ascending, joined with
// ` + ` / ` - `; zero prints as `0`; rational functions print as
// `(num) / (den)`.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotwalk/braid.hpp"
#include "knotwalk/diagram.hpp"
#include "knotwalk/laurent.hpp"
#include "knotwalk/markov.hpp"
#include "knotwalk/matrix.hpp"
#include "knotwalk/ratfun.hpp"
#include "knotwalk/series.hpp"
#include "knotwalk/twisting.hpp"
#include "vendor/json.hpp"

namespace knotwalk {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- text ----

inline std::string int_to_text(const Int& v) { return v.str(); }

inline std::string poly_to_text(const LaurentPoly& p, const std::string& var = "T") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e2, c] : p.terms()) {
        const bool neg = c < 0;
        const Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        os << mag.str() << "*" << var << "^";
        if (e2 % 2 == 0)
            os << (e2 / 2);
        else
            os << "(" << e2 << "/2)";
    }
    return os.str();
}

inline std::string ratfun_to_text(const RatFun& f, const std::string& var = "T") {
    return "(" + poly_to_text(f.num(), var) + ") / (" + poly_to_text(f.den(), var) + ")";
}

inline std::string matrix_to_text(const RatMatrix& m, const std::string& var = "T") {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << "  ";
            os << ratfun_to_text(m.at(i, j), var);
        }
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- json ----

namespace detail {

// 2^53, the largest magnitude a double-backed JSON number holds exactly.
inline const Int& json_coeff_limit() {
    static const Int limit = Int(1) << 53;
    return limit;
}

inline Json coeff_to_json(const Int& c) {
    Int mag = c < 0 ? Int(-c) : c;
    if (mag < json_coeff_limit()) return Json(static_cast<std::int64_t>(c));
    return Json(c.str());
}

inline Int coeff_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("polynomial coefficient must be an integer or a decimal string");
}

}  // namespace detail

inline Json poly_to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e2, c] : p.terms()) {
        Json t = Json::array();
        if (e2 % 2 == 0) {
            t.push_back(e2 / 2);
            t.push_back(1);
        } else {
            t.push_back(e2);
            t.push_back(2);
        }
        t.push_back(detail::coeff_to_json(c));
        terms.push_back(t);
    }
    return Json{{"terms", terms}};
}

inline LaurentPoly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial JSON must be {\"terms\": [...]}");
    LaurentPoly p;
    for (const Json& t : j["terms"]) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("polynomial term must be [exp_num, exp_den, coeff]");
        const long long en = t[0].get<long long>();
        const long long ed = t[1].get<long long>();
        if (ed != 1 && ed != 2)
            throw std::invalid_argument("polynomial exponent denominator must be 1 or 2");
        const Int c = detail::coeff_from_json(t[2]);
        p += LaurentPoly::term_half(ed == 1 ? 2 * en : en, c);
    }
    return p;
}

inline Json ratfun_to_json(const RatFun& f) {
    return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

inline RatFun ratfun_from_json(const Json& j) {
    // Accept a bare polynomial {"terms": ...} as shorthand for denominator 1.
    if (j.is_object() && j.contains("terms")) return RatFun(poly_from_json(j));
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("rational-function JSON must be {\"num\": ..., \"den\": ...}");
    return RatFun(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

inline Json braid_to_json(const BraidWord& w) {
    return Json{{"n", w.strand_count}, {"word", w.letters}};
}

inline BraidWord braid_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("word"))
        throw std::invalid_argument("braid JSON must be {\"n\": ..., \"word\": [...]}");
    BraidWord w;
    w.strand_count = j["n"].get<int>();
    w.letters = j["word"].get<std::vector<int>>();
    validate_braid(w);
    return w;
}

inline Json diagram_to_json(const UprightDiagram& d) {
    Json crossings = Json::array();
    for (const Crossing& c : d.crossings)
        crossings.push_back(Json{{"sign", c.sign},
                                 {"i", c.over_in},
                                 {"j", c.under_in},
                                 {"ip", c.over_out},
                                 {"jp", c.under_out}});
    Json rot = Json::object();
    for (const auto& [k, phi] : d.rotations) rot[std::to_string(k)] = phi;
    return Json{{"strands", d.strand_count},
                {"entry", d.entry},
                {"exit", d.exit},
                {"crossings", crossings},
                {"rotations", rot}};
}

inline UprightDiagram diagram_from_json(const Json& root) {
    const Json& j = (root.is_object() && root.contains("diagram")) ? root["diagram"] : root;
    if (!j.is_object() || !j.contains("strands"))
        throw std::invalid_argument("diagram JSON must contain \"strands\"");
    UprightDiagram d;
    d.strand_count = j["strands"].get<int>();
    d.entry = j.value("entry", 1);
    d.exit = j.value("exit", d.strand_count);
    if (j.contains("crossings"))
        for (const Json& cj : j["crossings"]) {
            Crossing c;
            c.sign = cj.at("sign").get<int>();
            c.over_in = cj.at("i").get<int>();
            c.under_in = cj.at("j").get<int>();
            c.over_out = cj.at("ip").get<int>();
            c.under_out = cj.at("jp").get<int>();
            d.crossings.push_back(c);
        }
    if (j.contains("rotations"))
        for (auto it = j["rotations"].begin(); it != j["rotations"].end(); ++it)
            d.rotations[std::atoi(it.key().c_str())] = it.value().get<int>();
    validate(d);
    return d;
}

inline Json family_to_json(const TwistedFamily& f) {
    return Json{{"m", f.m},
                {"prefix", f.prefix.letters},
                {"suffix", f.suffix.letters},
                {"slot", Json::array({f.slot_lo, f.slot_hi})},
                {"cut", f.cut}};
}

inline TwistedFamily family_from_json(const Json& root) {
    const Json& j = (root.is_object() && root.contains("family")) ? root["family"] : root;
    if (!j.is_object() || !j.contains("m") || !j.contains("slot"))
        throw std::invalid_argument("family JSON must contain \"m\" and \"slot\"");
    TwistedFamily f;
    f.m = j["m"].get<int>();
    f.prefix = BraidWord{f.m, j.value("prefix", std::vector<int>{})};
    f.suffix = BraidWord{f.m, j.value("suffix", std::vector<int>{})};
    const Json& slot = j["slot"];
    if (!slot.is_array() || slot.size() != 2)
        throw std::invalid_argument("family slot must be [lo, hi]");
    f.slot_lo = slot[0].get<int>();
    f.slot_hi = slot[1].get<int>();
    f.cut = j.value("cut", 1);
    validate_family(f);
    return f;
}

inline Json chain_to_json(const TangleChain& m) {
    Json matrix = Json::array();
    for (std::size_t i = 0; i < m.transition.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.transition.cols(); ++j)
            row.push_back(ratfun_to_json(m.transition.at(i, j)));
        matrix.push_back(row);
    }
    return Json{{"states", m.states},
                {"matrix", matrix},
                {"incoming", m.incoming},
                {"outgoing", m.outgoing}};
}

inline TangleChain chain_from_json(const Json& root) {
    const Json& j = (root.is_object() && root.contains("chain")) ? root["chain"] : root;
    if (!j.is_object() || !j.contains("states") || !j.contains("matrix"))
        throw std::invalid_argument("chain JSON must contain \"states\" and \"matrix\"");
    TangleChain m;
    m.states = j["states"].get<std::vector<int>>();
    const Json& rows = j["matrix"];
    m.transition = RatMatrix(m.states.size(), m.states.size());
    if (!rows.is_array() || rows.size() != m.states.size())
        throw std::invalid_argument("chain matrix must be dense and square over the states");
    for (std::size_t i = 0; i < m.states.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != m.states.size())
            throw std::invalid_argument("chain matrix must be dense and square over the states");
        for (std::size_t k = 0; k < m.states.size(); ++k)
            m.transition.at(i, k) = ratfun_from_json(rows[i][k]);
    }
    m.incoming = j.value("incoming", std::vector<int>{});
    m.outgoing = j.value("outgoing", std::vector<int>{});
    validate_chain(m);
    return m;
}

inline Json series_to_json(const TruncatedSeries& s) {
    Json coeffs = Json::array();
    for (const Int& c : s.coeffs) coeffs.push_back(detail::coeff_to_json(c));
    return Json{{"min_exp", s.min_exp}, {"cutoff", s.cutoff}, {"coeffs", coeffs}};
}

inline Json matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ratfun_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

// ---------------------------------------------------------------- files ----

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace knotwalk
