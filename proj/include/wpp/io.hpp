#ifndef WPP_IO_HPP
#define WPP_IO_HPP

// JSON and CSV encodings. Faces are sorted 1-based arrays; table keys are
// those arrays rendered as compact JSON text ("[]", "[1,2]") and appear in
// (cardinality, lexicographic) order. Integers that fit in 64 bits are JSON
// numbers, larger ones decimal strings; both forms are accepted on input.

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "wpp/algebra.hpp"
#include "wpp/complex.hpp"
#include "wpp/error.hpp"
#include "wpp/integer.hpp"
#include "wpp/lemmas.hpp"
#include "wpp/oracle.hpp"
#include "wpp/ring.hpp"
#include "wpp/sequences.hpp"

namespace wpp::io {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text, const std::string& origin = "input") {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Json read_json_file(const std::string& path) { return parse_json(read_file(path), path); }

// ---- scalars ---------------------------------------------------------------

inline Json integer_to_json(const Integer& n) {
    if (n >= 0 && n <= Integer(std::numeric_limits<std::uint64_t>::max())) {
        return Json(static_cast<std::uint64_t>(n));
    }
    if (n < 0 && n >= Integer(std::numeric_limits<std::int64_t>::min())) {
        return Json(static_cast<std::int64_t>(n));
    }
    return Json(n.str());
}

inline Integer integer_from_json(const Json& j, const std::string& where) {
    if (j.is_number_unsigned()) {
        return Integer(j.get<std::uint64_t>());
    }
    if (j.is_number_integer()) {
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return parse_integer(j.get<std::string>());
    }
    throw ParseError(where + ": expected an integer");
}

inline Json face_to_json(const Simplex& s) { return Json(s.vertices()); }

inline Simplex face_from_json(const Json& j, int m, const std::string& where) {
    if (!j.is_array()) {
        throw ParseError(where + ": face must be an array of vertices");
    }
    std::vector<int> verts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw ParseError(where + ": vertices must be integers");
        }
        int x = v.get<int>();
        if (x < 1 || x > m) {
            throw ParseError(where + ": vertex " + std::to_string(x) + " outside [1," + std::to_string(m) + "]");
        }
        verts.push_back(x);
    }
    try {
        return Simplex::from_unsorted(std::move(verts));
    } catch (const Error& e) {
        throw ParseError(where + ": " + e.what());
    }
}

inline std::string face_key(const Simplex& s) { return face_to_json(s).dump(); }

inline Simplex face_from_key(const std::string& key, int m) {
    return face_from_json(parse_json(key, "face key '" + key + "'"), m, "face key '" + key + "'");
}

inline int read_m(const Json& j, const std::string& what) {
    if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer()) {
        throw ParseError(what + ": missing integer field \"m\"");
    }
    int m = j["m"].get<int>();
    if (m < 1 || m > kMaxVertices) {
        throw ParseError(what + ": m must lie in [1," + std::to_string(kMaxVertices) + "]");
    }
    return m;
}

// ---- complexes -------------------------------------------------------------

inline Json to_json(const SimplicialComplex& k) {
    Json out;
    out["m"] = k.m();
    Json faces = Json::array();
    for (const auto& f : k.maximal_faces()) {
        faces.push_back(face_to_json(f));
    }
    out["maximal_faces"] = std::move(faces);
    return out;
}

inline SimplicialComplex complex_from_json(const Json& j) {
    int m = read_m(j, "complex");
    if (!j.contains("maximal_faces") || !j["maximal_faces"].is_array()) {
        throw ParseError("complex: missing array field \"maximal_faces\"");
    }
    std::vector<Simplex> faces;
    for (const auto& f : j["maximal_faces"]) {
        faces.push_back(face_from_json(f, m, "complex maximal face"));
    }
    return SimplicialComplex::from_maximal_faces(m, faces);
}

// ---- rings -----------------------------------------------------------------

inline Json to_json(const CoefficientRing& r) {
    Json out;
    if (r.inverts_all()) {
        out["inverted_primes"] = "all";
    } else {
        Json primes = Json::array();
        for (const auto& p : r.inverted_primes()) {
            primes.push_back(integer_to_json(p));
        }
        out["inverted_primes"] = std::move(primes);
    }
    return out;
}

inline CoefficientRing ring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("inverted_primes")) {
        throw ParseError("ring: missing field \"inverted_primes\"");
    }
    const Json& v = j["inverted_primes"];
    if (v.is_string() && v.get<std::string>() == "all") {
        return CoefficientRing::rationals();
    }
    if (!v.is_array()) {
        throw ParseError("ring: \"inverted_primes\" must be \"all\" or an array");
    }
    std::vector<Integer> primes;
    for (const auto& p : v) {
        primes.push_back(integer_from_json(p, "ring prime"));
    }
    if (primes.empty()) {
        return CoefficientRing::integers();
    }
    try {
        return CoefficientRing::localized(std::move(primes));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("ring: ") + e.what());
    }
}

// ---- sequences -------------------------------------------------------------

inline Json to_json(const PowerTable& t) {
    Json out;
    out["m"] = t.m;
    Json entries = Json::object();
    for (FaceMask f : ordered_subsets(t.m)) {
        Json row = Json::array();
        for (int i = 1; i <= t.m; ++i) {
            row.push_back(integer_to_json(t.at(f, i)));
        }
        entries[face_key(Simplex::from_mask(f))] = std::move(row);
    }
    out["entries"] = std::move(entries);
    return out;
}

inline Json to_json(const PowerSequence& ps) { return to_json(ps.table()); }

inline Json to_json(const CoefficientTable& t) {
    Json out;
    out["m"] = t.m;
    Json entries = Json::object();
    for (FaceMask f : ordered_subsets(t.m)) {
        entries[face_key(Simplex::from_mask(f))] = integer_to_json(t.at(f));
    }
    out["entries"] = std::move(entries);
    return out;
}

inline Json to_json(const CoefficientSequence& cs) { return to_json(cs.table()); }

namespace detail {

// Every face of the full simplex must appear exactly once.
template <class Fill>
void read_entries(const Json& j, int m, const std::string& what, Fill&& fill) {
    if (!j.contains("entries") || !j["entries"].is_object()) {
        throw ParseError(what + ": missing object field \"entries\"");
    }
    std::vector<bool> seen(std::size_t{1} << m, false);
    for (const auto& [key, value] : j["entries"].items()) {
        Simplex s = face_from_key(key, m);
        if (seen[s.mask()]) {
            throw ParseError(what + ": face " + key + " listed twice");
        }
        seen[s.mask()] = true;
        fill(s, value);
    }
    for (std::size_t f = 0; f < seen.size(); ++f) {
        if (!seen[f]) {
            throw ParseError(what + ": missing entry for face " +
                             face_key(Simplex::from_mask(static_cast<FaceMask>(f))));
        }
    }
}

inline void check_positive(const Integer& n, const std::string& where) {
    if (n < 1) {
        throw ParseError(where + ": entries must be positive, got " + n.str());
    }
}

}  // namespace detail

inline PowerTable power_table_from_json(const Json& j) {
    int m = read_m(j, "power sequence");
    PowerTable t = PowerTable::ones(m);
    detail::read_entries(j, m, "power sequence", [&](const Simplex& s, const Json& row) {
        std::string where = "power sequence entry " + face_key(s);
        if (!row.is_array() || row.size() != static_cast<std::size_t>(m)) {
            throw ParseError(where + ": expected an array of " + std::to_string(m) + " integers");
        }
        for (int i = 1; i <= m; ++i) {
            Integer v = integer_from_json(row[static_cast<std::size_t>(i - 1)], where);
            detail::check_positive(v, where);
            t.at(s.mask(), i) = std::move(v);
        }
    });
    return t;
}

inline CoefficientTable coefficient_table_from_json(const Json& j) {
    int m = read_m(j, "coefficient sequence");
    CoefficientTable t = CoefficientTable::ones(m);
    detail::read_entries(j, m, "coefficient sequence", [&](const Simplex& s, const Json& value) {
        std::string where = "coefficient sequence entry " + face_key(s);
        Integer v = integer_from_json(value, where);
        detail::check_positive(v, where);
        t.at(s.mask()) = std::move(v);
    });
    return t;
}

inline Json to_json(const PowerViolation& v) {
    Json out;
    out["kind"] = v.kind == PowerViolation::Kind::off_face ? "off-face" : "divisibility";
    out["tau"] = face_to_json(v.tau);
    out["sigma"] = face_to_json(v.sigma);
    out["vertex"] = v.vertex;
    out["lower"] = integer_to_json(v.lower);
    out["value"] = integer_to_json(v.value);
    out["message"] = v.describe();
    return out;
}

inline Json to_json(const CoefficientViolation& v) {
    Json out;
    switch (v.kind) {
        case CoefficientViolation::Kind::normalization: out["kind"] = "normalization"; break;
        case CoefficientViolation::Kind::divisibility: out["kind"] = "divisibility"; break;
        case CoefficientViolation::Kind::coprimality: out["kind"] = "coprimality"; break;
    }
    out["sigma"] = face_to_json(v.sigma);
    if (v.kind == CoefficientViolation::Kind::divisibility) {
        out["parts"] = Json::array({face_to_json(v.first), face_to_json(v.second)});
        out["product"] = integer_to_json(v.product);
    }
    if (v.kind == CoefficientViolation::Kind::coprimality) {
        out["prime"] = integer_to_json(v.prime);
    }
    out["value"] = integer_to_json(v.value);
    out["message"] = v.describe();
    return out;
}

// ---- algebra ---------------------------------------------------------------

/// [{"face":[..],"index":[..],"coeff":"num/den"}, ...]; indices are 1-based.
inline Json to_json(const AlgebraElement& x) {
    Json out = Json::array();
    for (const auto& [key, c] : x.terms()) {
        Json term;
        term["face"] = face_to_json(key.simplex());
        Json idx = Json::array();
        for (int i : key.index) {
            idx.push_back(i + 1);
        }
        term["index"] = std::move(idx);
        term["coeff"] = to_string(c);
        out.push_back(std::move(term));
    }
    return out;
}

inline AlgebraElement element_from_json(const Json& j, int m) {
    if (!j.is_array()) {
        throw ParseError("element: expected an array of terms");
    }
    AlgebraElement x;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("face") || !term.contains("index") || !term.contains("coeff")) {
            throw ParseError("element term: needs \"face\", \"index\" and \"coeff\"");
        }
        Simplex s = face_from_json(term["face"], m, "element face");
        if (!term["index"].is_array() || term["index"].size() != static_cast<std::size_t>(s.size())) {
            throw ParseError("element term: index length must equal the face size");
        }
        std::vector<int> idx;
        for (const auto& i : term["index"]) {
            if (!i.is_number_integer() || i.get<int>() < 1) {
                throw ParseError("element term: indices are positive integers");
            }
            idx.push_back(i.get<int>() - 1);
        }
        const Json& c = term["coeff"];
        Rational coeff = c.is_string() ? parse_rational(c.get<std::string>())
                                       : Rational(integer_from_json(c, "element coefficient"));
        x.add(BasisKey{s.mask(), idx}, coeff);
    }
    return x;
}

/// One row per ordered pair of basis ids: left_id,right_id,left,right,product.
/// The product column is "0" or terms joined by " + ", e.g. "2*y[1,2|1,1]".
inline std::string structure_table_csv(const StructureTable& t) {
    std::string out = "left_id,right_id,left,right,product\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            AlgebraElement prod;
            for (const auto& [id, c] : t.products[i][j]) {
                prod.add(t.keys[id], c);
            }
            out += std::to_string(i) + "," + std::to_string(j) + ",\"" + t.keys[i].label() + "\",\"" +
                   t.keys[j].label() + "\",\"" + prod.to_string() + "\"\n";
        }
    }
    return out;
}

// ---- reports ---------------------------------------------------------------

inline Json to_json(const LemmaCheck& c) {
    Json out;
    out["name"] = c.name;
    out["pass"] = c.pass;
    out["detail"] = c.detail;
    return out;
}

inline Json to_json(const oracle::OracleReport& r) {
    Json out;
    out["instance"] = r.instance;
    out["property"] = r.property;
    out["pass"] = r.pass;
    out["checked"] = r.checked;
    if (r.counterexample) {
        Json cx;
        cx["inputs"] = r.counterexample->inputs;
        cx["lhs"] = r.counterexample->lhs;
        cx["rhs"] = r.counterexample->rhs;
        out["counterexample"] = std::move(cx);
    }
    return out;
}

inline std::string to_text(const oracle::OracleReport& r) {
    std::string out = std::string(r.pass ? "PASS " : "FAIL ") + r.property + " (" + std::to_string(r.checked) +
                      " checked)";
    if (r.counterexample) {
        out += ": inputs";
        for (const auto& s : r.counterexample->inputs) {
            out += " " + s;
        }
        out += " give " + r.counterexample->lhs + " vs " + r.counterexample->rhs;
    }
    return out;
}

}  // namespace wpp::io

#endif  // WPP_IO_HPP
