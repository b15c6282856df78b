#ifndef WPP_ALGEBRA_HPP
#define WPP_ALGEBRA_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpp/complex.hpp"
#include "wpp/error.hpp"
#include "wpp/integer.hpp"
#include "wpp/ring.hpp"
#include "wpp/sequences.hpp"

namespace wpp {

/// Degrees of the generators of each vertex: degrees[i-1][j] is the degree of
/// the j-th generator (0-based) of vertex i. All degrees are positive.
struct GeneratorSpec {
    std::vector<std::vector<int>> degrees;

    /// One generator per vertex (the sphere case).
    static GeneratorSpec spheres(const std::vector<int>& d) {
        GeneratorSpec g;
        for (int x : d) {
            g.degrees.push_back({x});
        }
        g.validate();
        return g;
    }

    int m() const { return static_cast<int>(degrees.size()); }

    int degree(int vertex, int index) const {
        return degrees[static_cast<std::size_t>(vertex - 1)][static_cast<std::size_t>(index)];
    }

    std::size_t generator_count(int vertex) const { return degrees[static_cast<std::size_t>(vertex - 1)].size(); }

    void validate() const {
        detail::check_universe(m(), "GeneratorSpec");
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            for (int d : degrees[i]) {
                if (d < 1) {
                    throw PreconditionError("generator degrees must be positive (vertex " + std::to_string(i + 1) +
                                            " has degree " + std::to_string(d) + ")");
                }
            }
        }
    }

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// A basis element y_{tau,u}: face plus one generator index per vertex of the
/// face, listed in increasing vertex order. The empty face is the unit.
struct BasisKey {
    FaceMask face = 0;
    std::vector<int> index;

    Simplex simplex() const { return Simplex::from_mask(face); }

    /// "1" for the unit, otherwise "y[1,3|1,2]" (indices 1-based).
    std::string label() const {
        if (face == 0) {
            return "1";
        }
        std::string out = "y" + simplex().to_string();
        out.back() = '|';
        for (std::size_t k = 0; k < index.size(); ++k) {
            out += (k ? "," : "") + std::to_string(index[k] + 1);
        }
        return out + "]";
    }

    friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

/// Face order, then index lexicographically.
struct BasisKeyLess {
    bool operator()(const BasisKey& a, const BasisKey& b) const {
        if (a.face != b.face) {
            return detail::face_order_less(a.face, b.face);
        }
        return a.index < b.index;
    }
};

inline int key_degree(const GeneratorSpec& gens, const BasisKey& key) {
    int total = 0;
    std::size_t k = 0;
    for (FaceMask rest = key.face; rest != 0; rest &= rest - 1, ++k) {
        total += gens.degree(std::countr_zero(rest) + 1, key.index[k]);
    }
    return total;
}

/// Finite rational combination of basis elements; zero coefficients are never stored.
class AlgebraElement {
public:
    using Terms = std::map<BasisKey, Rational, BasisKeyLess>;

    AlgebraElement() = default;

    static AlgebraElement unit() { return basis(BasisKey{}); }

    static AlgebraElement basis(const BasisKey& key, const Rational& coeff = 1) {
        AlgebraElement x;
        x.add(key, coeff);
        return x;
    }

    void add(const BasisKey& key, const Rational& coeff) {
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const BasisKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [k, c] : o.terms_) {
            add(k, c);
        }
        return *this;
    }

    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (const auto& [k, c] : o.terms_) {
            add(k, -c);
        }
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    friend AlgebraElement operator*(const Rational& s, const AlgebraElement& x) {
        AlgebraElement out;
        for (const auto& [k, c] : x.terms_) {
            out.add(k, s * c);
        }
        return out;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

    /// "0", or terms like "2*y[1,2|1,1] - 1/2*y[3|1]" in key order.
    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            if (k.face == 0) {
                out += wpp::to_string(mag);
            } else {
                out += (mag == 1 ? std::string() : wpp::to_string(mag) + "*") + k.label();
            }
        }
        return out;
    }

private:
    Terms terms_;
};

struct BasisElement {
    BasisKey key;
    int degree = 0;
};

// Sparse row of a structure table: (basis id, coefficient), ids ascending.
using SparseTerms = std::vector<std::pair<std::size_t, Rational>>;

/// Exported multiplication table of a graded algebra with a finite basis.
struct StructureTable {
    std::vector<BasisKey> keys;
    std::vector<int> degrees;
    std::vector<std::vector<SparseTerms>> products;  // products[i][j] = b_i * b_j

    std::size_t size() const { return keys.size(); }

    std::optional<std::size_t> find(const BasisKey& key) const {
        for (std::size_t k = 0; k < keys.size(); ++k) {
            if (keys[k] == key) {
                return k;
            }
        }
        return std::nullopt;
    }
};

namespace detail {

inline std::vector<BasisElement> enumerate_basis(const GeneratorSpec& gens, const SimplicialComplex& k) {
    std::vector<BasisElement> out;
    for (FaceMask f : k.face_masks()) {
        auto verts = Simplex::from_mask(f).vertices();
        std::vector<int> idx(verts.size(), 0);
        bool empty_factor = false;
        for (int v : verts) {
            empty_factor = empty_factor || gens.generator_count(v) == 0;
        }
        if (empty_factor) {
            continue;
        }
        while (true) {
            BasisKey key{f, idx};
            out.push_back({key, key_degree(gens, key)});
            bool exhausted = true;
            for (std::size_t pos = idx.size(); pos-- > 0;) {
                if (static_cast<std::size_t>(++idx[pos]) < gens.generator_count(verts[pos])) {
                    exhausted = false;
                    break;
                }
                idx[pos] = 0;
            }
            if (exhausted) {
                break;
            }
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const BasisElement& a, const BasisElement& b) { return a.degree < b.degree; });
    return out;
}

// Vertices of key's face whose chosen generator has odd degree.
inline FaceMask odd_vertices(const GeneratorSpec& gens, const BasisKey& key) {
    FaceMask odd = 0;
    std::size_t k = 0;
    for (FaceMask rest = key.face; rest != 0; rest &= rest - 1, ++k) {
        int v = std::countr_zero(rest) + 1;
        if (gens.degree(v, key.index[k]) % 2 != 0) {
            odd |= FaceMask{1} << (v - 1);
        }
    }
    return odd;
}

// Koszul sign of merging the generator list of a (left) with that of b
// (right) into increasing vertex order: one factor -1 for every pair of odd
// generators that must cross.
inline int merge_sign(FaceMask odd_left, FaceMask odd_right) {
    int crossings = 0;
    for (FaceMask rest = odd_right; rest != 0; rest &= rest - 1) {
        FaceMask b = rest & (~rest + 1);
        FaceMask above = ~((b << 1) - 1);
        crossings += std::popcount(odd_left & above);
    }
    return crossings % 2 == 0 ? 1 : -1;
}

inline std::vector<int> merge_index(const BasisKey& a, const BasisKey& b) {
    std::vector<int> out;
    out.reserve(a.index.size() + b.index.size());
    std::size_t ia = 0;
    std::size_t ib = 0;
    for (FaceMask rest = a.face | b.face; rest != 0; rest &= rest - 1) {
        FaceMask bit = rest & (~rest + 1);
        out.push_back((a.face & bit) != 0 ? a.index[ia++] : b.index[ib++]);
    }
    return out;
}

}  // namespace detail

/// Result of multiplying two basis elements: coefficient times a basis element.
struct BasisProduct {
    Integer coefficient;
    BasisKey key;
};

/// The weighted graded-commutative algebra on generators `gens` with power
/// sequence c, modulo the faces missing from K. The quotient is realized by
/// keeping only basis elements y_{tau,u} with tau in K.
class WeightedAlgebra {
public:
    WeightedAlgebra(GeneratorSpec gens, PowerSequence c, SimplicialComplex k, CoefficientRing ring)
        : gens_(std::move(gens)), c_(std::move(c)), k_(std::move(k)), ring_(std::move(ring)) {
        gens_.validate();
        if (gens_.m() != c_.m() || gens_.m() != k_.m()) {
            throw PreconditionError("make_algebra: mismatched m (generators " + std::to_string(gens_.m()) +
                                    ", power sequence " + std::to_string(c_.m()) + ", complex " +
                                    std::to_string(k_.m()) + ")");
        }
        basis_ = detail::enumerate_basis(gens_, k_);
        for (std::size_t id = 0; id < basis_.size(); ++id) {
            ids_.emplace(basis_[id].key, id);
        }
    }

    int m() const { return gens_.m(); }
    const GeneratorSpec& generators() const { return gens_; }
    const PowerSequence& power_sequence() const { return c_; }
    const SimplicialComplex& complex() const { return k_; }
    const CoefficientRing& ring() const { return ring_; }

    /// Canonical (degree, face, index) order; the unit comes first.
    const std::vector<BasisElement>& basis() const { return basis_; }

    std::optional<std::size_t> find(const BasisKey& key) const {
        auto it = ids_.find(key);
        return it == ids_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
    }

    bool has_basis_key(const BasisKey& key) const { return ids_.count(key) != 0; }

    bool is_over(const AlgebraElement& x) const {
        for (const auto& [key, c] : x.terms()) {
            if (!has_basis_key(key)) {
                return false;
            }
        }
        return true;
    }

    void check_over(const AlgebraElement& x, const char* who) const {
        for (const auto& [key, c] : x.terms()) {
            if (!has_basis_key(key)) {
                throw PreconditionError(std::string(who) + ": " + key.label() + " is not a basis element here");
            }
        }
    }

    int degree(const BasisKey& key) const { return key_degree(gens_, key); }

    /// y_{tau,u} * y_{omega,v}: zero for overlapping faces or a union outside
    /// K, otherwise sign * lambda * y_{tau u omega, w} with
    /// lambda = prod_{i in tau} c_i^U / c_i^tau * prod_{i in omega} c_i^U / c_i^omega.
    std::optional<BasisProduct> multiply_basis(const BasisKey& a, const BasisKey& b) const {
        if ((a.face & b.face) != 0) {
            return std::nullopt;
        }
        FaceMask u = a.face | b.face;
        if (!k_.contains_mask(u)) {
            return std::nullopt;
        }
        Integer lambda = 1;
        for (FaceMask rest = a.face; rest != 0; rest &= rest - 1) {
            int i = std::countr_zero(rest) + 1;
            lambda *= c_.entry(u, i) / c_.entry(a.face, i);
        }
        for (FaceMask rest = b.face; rest != 0; rest &= rest - 1) {
            int i = std::countr_zero(rest) + 1;
            lambda *= c_.entry(u, i) / c_.entry(b.face, i);
        }
        int sign = detail::merge_sign(detail::odd_vertices(gens_, a), detail::odd_vertices(gens_, b));
        return BasisProduct{sign * lambda, BasisKey{u, detail::merge_index(a, b)}};
    }

    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const {
        check_over(x, "mul");
        check_over(y, "mul");
        AlgebraElement out;
        for (const auto& [ka, ca] : x.terms()) {
            for (const auto& [kb, cb] : y.terms()) {
                if (auto p = multiply_basis(ka, kb)) {
                    out.add(p->key, ca * cb * Rational(p->coefficient));
                }
            }
        }
        return out;
    }

    AlgebraElement element(std::size_t id) const { return AlgebraElement::basis(basis_.at(id).key); }

private:
    GeneratorSpec gens_;
    PowerSequence c_;
    SimplicialComplex k_;
    CoefficientRing ring_;
    std::vector<BasisElement> basis_;
    std::map<BasisKey, std::size_t, BasisKeyLess> ids_;
};

inline WeightedAlgebra make_algebra(GeneratorSpec gens, PowerSequence c, SimplicialComplex k, CoefficientRing ring) {
    return WeightedAlgebra(std::move(gens), std::move(c), std::move(k), std::move(ring));
}

inline AlgebraElement mul(const WeightedAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
    return a.multiply(x, y);
}

/// Same generators, complex and ring with the all-ones power sequence.
inline WeightedAlgebra ordinary_algebra(const WeightedAlgebra& a) {
    return WeightedAlgebra(a.generators(), PowerSequence::from_table(PowerTable::ones(a.m())), a.complex(), a.ring());
}

/// Same generators, power sequence and ring over a subcomplex.
inline WeightedAlgebra restricted_algebra(const WeightedAlgebra& a, const SimplicialComplex& l) {
    if (!l.is_subcomplex_of(a.complex())) {
        throw PreconditionError("restrict: not a subcomplex");
    }
    return WeightedAlgebra(a.generators(), a.power_sequence(), l, a.ring());
}

/// A(c): free module on a_sigma, sigma in [m], |a_sigma| = sum of d_i, with
/// a_sigma * a_omega = sign * c_{sigma u omega} / (c_sigma c_omega) * a_{sigma u omega}
/// for disjoint faces and zero otherwise.
class SphereAlgebra {
public:
    SphereAlgebra(const CoefficientTable& cs, std::vector<int> degrees, const CoefficientRing& ring)
        : cs_(CoefficientSequence::from_table(cs, ring)), gens_(GeneratorSpec::spheres(degrees)) {
        if (static_cast<int>(degrees.size()) != cs.m) {
            throw PreconditionError("sphere_algebra: need " + std::to_string(cs.m) + " degrees");
        }
        basis_ = detail::enumerate_basis(gens_, SimplicialComplex::full_simplex(cs.m));
    }

    int m() const { return cs_.m(); }
    const CoefficientSequence& coefficients() const { return cs_; }
    const GeneratorSpec& generators() const { return gens_; }
    const CoefficientRing& ring() const { return cs_.ring(); }
    const std::vector<BasisElement>& basis() const { return basis_; }

    static BasisKey key_of(const Simplex& sigma) {
        return BasisKey{sigma.mask(), std::vector<int>(static_cast<std::size_t>(sigma.size()), 0)};
    }

    std::optional<BasisProduct> multiply_basis(const BasisKey& a, const BasisKey& b) const {
        if ((a.face & b.face) != 0) {
            return std::nullopt;
        }
        FaceMask u = a.face | b.face;
        Integer num = cs_.value(u);
        Integer den = cs_.value(a.face) * cs_.value(b.face);
        int sign = detail::merge_sign(detail::odd_vertices(gens_, a), detail::odd_vertices(gens_, b));
        return BasisProduct{sign * (num / den), key_of(Simplex::from_mask(u))};
    }

    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const {
        AlgebraElement out;
        for (const auto& [ka, ca] : x.terms()) {
            for (const auto& [kb, cb] : y.terms()) {
                if (ka.face > detail::universe_mask(m()) || kb.face > detail::universe_mask(m())) {
                    throw PreconditionError("sphere algebra: term outside vertex universe");
                }
                if (auto p = multiply_basis(ka, kb)) {
                    out.add(p->key, ca * cb * Rational(p->coefficient));
                }
            }
        }
        return out;
    }

private:
    CoefficientSequence cs_;
    GeneratorSpec gens_;
    std::vector<BasisElement> basis_;
};

inline SphereAlgebra sphere_algebra(const CoefficientTable& cs, const std::vector<int>& degrees,
                                    const CoefficientRing& ring) {
    return SphereAlgebra(cs, degrees, ring);
}

inline SphereAlgebra sphere_algebra(const CoefficientSequence& cs, const std::vector<int>& degrees,
                                    const CoefficientRing& ring) {
    return SphereAlgebra(cs.table(), degrees, ring);
}

/// Multiplication table over the canonical basis of any algebra exposing
/// basis() and multiply_basis().
template <class Algebra>
StructureTable structure_table(const Algebra& a) {
    StructureTable t;
    std::map<BasisKey, std::size_t, BasisKeyLess> ids;
    for (const auto& b : a.basis()) {
        ids.emplace(b.key, t.keys.size());
        t.keys.push_back(b.key);
        t.degrees.push_back(b.degree);
    }
    t.products.assign(t.size(), std::vector<SparseTerms>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (auto p = a.multiply_basis(t.keys[i], t.keys[j])) {
                if (p->coefficient != 0) {
                    t.products[i][j].emplace_back(ids.at(p->key), Rational(p->coefficient));
                }
            }
        }
    }
    return t;
}

struct MatchReport {
    bool match = false;
    std::string detail;  // first disagreement, empty on match
};

/// Pairs basis elements with equal keys; throws unless this is a bijection.
inline std::vector<std::size_t> correspondence_by_key(const StructureTable& a, const StructureTable& b) {
    if (a.size() != b.size()) {
        throw PreconditionError("correspondence: basis sizes differ (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
    }
    std::map<BasisKey, std::size_t, BasisKeyLess> ids;
    for (std::size_t k = 0; k < b.size(); ++k) {
        ids.emplace(b.keys[k], k);
    }
    std::vector<std::size_t> out;
    out.reserve(a.size());
    for (const auto& key : a.keys) {
        auto it = ids.find(key);
        if (it == ids.end()) {
            throw PreconditionError("correspondence: " + key.label() + " has no partner");
        }
        out.push_back(it->second);
    }
    return out;
}

/// True iff every pairwise product agrees under the correspondence a_k <-> b_{corr[k]}.
inline MatchReport structure_constants_match(const StructureTable& a, const StructureTable& b,
                                             const std::vector<std::size_t>& corr) {
    if (corr.size() != a.size() || a.size() != b.size()) {
        throw PreconditionError("structure_constants_match: correspondence is not a bijection");
    }
    std::vector<bool> hit(b.size(), false);
    for (std::size_t k : corr) {
        if (k >= b.size() || hit[k]) {
            throw PreconditionError("structure_constants_match: correspondence is not a bijection");
        }
        hit[k] = true;
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a.degrees[k] != b.degrees[corr[k]]) {
            return {false, "degree mismatch: " + a.keys[k].label() + " has degree " + std::to_string(a.degrees[k]) +
                               ", partner has " + std::to_string(b.degrees[corr[k]])};
        }
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            SparseTerms mapped;
            for (const auto& [id, c] : a.products[i][j]) {
                mapped.emplace_back(corr[id], c);
            }
            std::sort(mapped.begin(), mapped.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            if (mapped != b.products[corr[i]][corr[j]]) {
                return {false, "product " + a.keys[i].label() + " * " + a.keys[j].label() + " differs"};
            }
        }
    }
    return {true, {}};
}

/// eta*: basis-wise map from the algebra over a full simplex sigma to its
/// ordinary (c = 1) counterpart, y_{tau,u} -> prod_{i in tau} c_i^sigma / c_i^tau x_{tau,u}.
inline AlgebraElement eta_star(const WeightedAlgebra& a, const AlgebraElement& x) {
    auto sigma = a.complex().as_simplex();
    if (!sigma) {
        throw PreconditionError("eta_star: complex is not a single simplex");
    }
    a.check_over(x, "eta_star");
    AlgebraElement out;
    for (const auto& [key, c] : x.terms()) {
        Integer scale = 1;
        for (FaceMask rest = key.face; rest != 0; rest &= rest - 1) {
            int i = std::countr_zero(rest) + 1;
            scale *= a.power_sequence().entry(sigma->mask(), i) / a.power_sequence().entry(key.face, i);
        }
        out.add(key, c * Rational(scale));
    }
    return out;
}

/// Drops every term whose face is not in L.
inline AlgebraElement restrict(const WeightedAlgebra& a, const SimplicialComplex& l, const AlgebraElement& x) {
    if (!l.is_subcomplex_of(a.complex())) {
        throw PreconditionError("restrict: not a subcomplex");
    }
    a.check_over(x, "restrict");
    AlgebraElement out;
    for (const auto& [key, c] : x.terms()) {
        if (l.contains_mask(key.face)) {
            out.add(key, c);
        }
    }
    return out;
}

/// Basis-preserving inclusion of the algebra over K_I into the algebra over K.
inline AlgebraElement include_full_subcomplex(const WeightedAlgebra& a, const Simplex& vertex_set,
                                              const AlgebraElement& x) {
    if (vertex_set.max_vertex() > a.m()) {
        throw PreconditionError("include_full_subcomplex: vertex set " + vertex_set.to_string() + " outside [" +
                                std::to_string(a.m()) + "]");
    }
    for (const auto& [key, c] : x.terms()) {
        if ((key.face & ~vertex_set.mask()) != 0 || !a.has_basis_key(key)) {
            throw PreconditionError("include_full_subcomplex: " + key.label() + " is not over the full subcomplex");
        }
    }
    return x;
}

/// Ranks of the degree-n parts for n = 0..max_degree.
template <class Algebra>
std::vector<Integer> poincare_series(const Algebra& a, int max_degree) {
    if (max_degree < 0) {
        throw PreconditionError("poincare_series: max_degree must be non-negative");
    }
    std::vector<Integer> out(static_cast<std::size_t>(max_degree) + 1, 0);
    for (const auto& b : a.basis()) {
        if (b.degree <= max_degree) {
            out[static_cast<std::size_t>(b.degree)] += 1;
        }
    }
    return out;
}

/// Rank of a rational matrix by exact Gaussian elimination.
inline std::size_t rank_over_rationals(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) {
                continue;
            }
            Rational factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < cols; ++c) {
                rows[r][c] -= factor * rows[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

/// Matrix of eta* restricted to degree n: one column per weighted basis
/// element of degree n, one row per ordinary basis element of degree n.
inline std::vector<std::vector<Rational>> eta_star_matrix(const WeightedAlgebra& a, int degree) {
    std::vector<BasisKey> keys;
    for (const auto& b : a.basis()) {
        if (b.degree == degree) {
            keys.push_back(b.key);
        }
    }
    std::vector<std::vector<Rational>> rows(keys.size(), std::vector<Rational>(keys.size(), 0));
    for (std::size_t col = 0; col < keys.size(); ++col) {
        AlgebraElement image = eta_star(a, AlgebraElement::basis(keys[col]));
        for (std::size_t row = 0; row < keys.size(); ++row) {
            rows[row][col] = image.coefficient(keys[row]);
        }
    }
    return rows;
}

/// Every coefficient's denominator is a unit of the ring.
inline bool coefficients_in_ring(const CoefficientRing& ring, const AlgebraElement& x) {
    for (const auto& [key, c] : x.terms()) {
        if (!ring.contains(c)) {
            return false;
        }
    }
    return true;
}

}  // namespace wpp

#endif  // WPP_ALGEBRA_HPP
