#ifndef WPP_ORACLE_HPP
#define WPP_ORACLE_HPP

// Brute-force reference implementations. Nothing here calls the engine's
// basis multiplication (WeightedAlgebra::multiply_basis, detail::merge_sign);
// signs come from literally sorting generator lists.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wpp/algebra.hpp"
#include "wpp/complex.hpp"
#include "wpp/error.hpp"
#include "wpp/integer.hpp"
#include "wpp/parallel.hpp"

namespace wpp::oracle {

inline constexpr std::size_t kMaxExhaustiveBasis = 512;

struct GeneratorRef {
    int vertex = 0;  // 1-based
    int index = 0;   // 0-based generator of that vertex
};

namespace detail {

struct Factor {
    int vertex;
    int index;
    int degree;
};

// Bubble sort by vertex, flipping the sign on each swap of two odd factors.
// Returns 0 when a vertex repeats.
inline int sort_with_koszul_sign(std::vector<Factor>& factors) {
    int sign = 1;
    for (std::size_t pass = 0; pass < factors.size(); ++pass) {
        for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
            if (factors[k].vertex > factors[k + 1].vertex) {
                if (factors[k].degree % 2 != 0 && factors[k + 1].degree % 2 != 0) {
                    sign = -sign;
                }
                std::swap(factors[k], factors[k + 1]);
            }
        }
    }
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
        if (factors[k].vertex == factors[k + 1].vertex) {
            return 0;
        }
    }
    return sign;
}

inline std::vector<Factor> factors_of(const GeneratorSpec& gens, const BasisKey& key) {
    std::vector<Factor> out;
    std::vector<int> verts = Simplex::from_mask(key.face).vertices();
    for (std::size_t k = 0; k < verts.size(); ++k) {
        out.push_back({verts[k], key.index[k], gens.degree(verts[k], key.index[k])});
    }
    return out;
}

using Sparse = std::map<std::size_t, Rational>;

inline void accumulate(Sparse& into, const SparseTerms& terms, const Rational& scale) {
    for (const auto& [id, c] : terms) {
        Rational& slot = into[id];
        slot += scale * c;
        if (slot == 0) {
            into.erase(id);
        }
    }
}

inline std::string render(const StructureTable& t, const Sparse& x) {
    AlgebraElement e;
    for (const auto& [id, c] : x) {
        e.add(t.keys[id], c);
    }
    return e.to_string();
}

}  // namespace detail

/// Multiplication table of the unweighted polyhedral-product cohomology with
/// suspension factors: x_{tau,u} x_{omega,v} = sign * x_{tau u omega, w} when
/// the faces are disjoint and their union lies in K, zero otherwise.
inline StructureTable ordinary_star_algebra(const GeneratorSpec& gens, const SimplicialComplex& k) {
    gens.validate();
    if (gens.m() != k.m()) {
        throw PreconditionError("ordinary_star_algebra: mismatched m");
    }
    StructureTable t;
    std::size_t faces = std::size_t{1} << k.m();
    for (std::size_t f = 0; f < faces; ++f) {
        if (!k.contains_mask(static_cast<FaceMask>(f))) {
            continue;
        }
        std::vector<int> verts = Simplex::from_mask(static_cast<FaceMask>(f)).vertices();
        std::size_t combos = 1;
        for (int v : verts) {
            combos *= gens.generator_count(v);
        }
        for (std::size_t n = 0; n < combos; ++n) {
            std::vector<int> idx(verts.size());
            std::size_t rest = n;
            int degree = 0;
            for (std::size_t pos = verts.size(); pos-- > 0;) {
                idx[pos] = static_cast<int>(rest % gens.generator_count(verts[pos]));
                rest /= gens.generator_count(verts[pos]);
                degree += gens.degree(verts[pos], idx[pos]);
            }
            t.keys.push_back(BasisKey{static_cast<FaceMask>(f), idx});
            t.degrees.push_back(degree);
        }
    }
    std::map<std::pair<FaceMask, std::vector<int>>, std::size_t> ids;
    for (std::size_t n = 0; n < t.keys.size(); ++n) {
        ids[{t.keys[n].face, t.keys[n].index}] = n;
    }
    t.products.assign(t.size(), std::vector<SparseTerms>(t.size()));
    for (std::size_t a = 0; a < t.size(); ++a) {
        for (std::size_t b = 0; b < t.size(); ++b) {
            auto fa = detail::factors_of(gens, t.keys[a]);
            auto fb = detail::factors_of(gens, t.keys[b]);
            fa.insert(fa.end(), fb.begin(), fb.end());
            int sign = detail::sort_with_koszul_sign(fa);
            if (sign == 0) {
                continue;
            }
            FaceMask face = t.keys[a].face | t.keys[b].face;
            if (!k.contains_mask(face)) {
                continue;
            }
            std::vector<int> idx;
            for (const auto& f : fa) {
                idx.push_back(f.index);
            }
            t.products[a][b].emplace_back(ids.at({face, idx}), Rational(sign));
        }
    }
    return t;
}

/// Closed form for a product of k generators, evaluated directly:
/// prod_l c_{i_l}^tau / c_{i_l}^{i_l} y_{tau,u} with the sign of the sorting
/// permutation; zero on a repeated vertex or when tau is not in K.
inline AlgebraElement kary_generator_expansion(const WeightedAlgebra& a, const std::vector<GeneratorRef>& refs) {
    if (refs.size() > 6) {
        throw PreconditionError("kary_generator_expansion: at most 6 generators");
    }
    std::vector<detail::Factor> factors;
    for (const auto& r : refs) {
        if (r.vertex < 1 || r.vertex > a.m() || r.index < 0 ||
            static_cast<std::size_t>(r.index) >= a.generators().generator_count(r.vertex)) {
            throw PreconditionError("kary_generator_expansion: no generator (" + std::to_string(r.vertex) + "," +
                                    std::to_string(r.index) + ")");
        }
        factors.push_back({r.vertex, r.index, a.generators().degree(r.vertex, r.index)});
    }
    int sign = detail::sort_with_koszul_sign(factors);
    if (sign == 0) {
        return {};
    }
    FaceMask tau = 0;
    std::vector<int> idx;
    for (const auto& f : factors) {
        tau |= FaceMask{1} << (f.vertex - 1);
        idx.push_back(f.index);
    }
    if (!a.complex().contains_mask(tau)) {
        return {};
    }
    Rational coeff = sign;
    for (const auto& f : factors) {
        FaceMask vertex_face = FaceMask{1} << (f.vertex - 1);
        coeff *= Rational(a.power_sequence().entry(tau, f.vertex), a.power_sequence().entry(vertex_face, f.vertex));
    }
    return AlgebraElement::basis(BasisKey{tau, idx}, coeff);
}

/// Sum over nonempty faces of K of the products of the vertex generating
/// polynomials, plus 1 in degree 0.
inline std::vector<Integer> tensor_poincare_series(const GeneratorSpec& gens, const SimplicialComplex& k,
                                                   int max_degree) {
    std::vector<Integer> total(static_cast<std::size_t>(max_degree) + 1, 0);
    total[0] = 1;
    for (FaceMask f : k.face_masks()) {
        if (f == 0) {
            continue;
        }
        std::vector<Integer> poly(static_cast<std::size_t>(max_degree) + 1, 0);
        poly[0] = 1;
        for (int v : Simplex::from_mask(f).vertices()) {
            std::vector<Integer> next(poly.size(), 0);
            for (std::size_t n = 0; n < poly.size(); ++n) {
                if (poly[n] == 0) {
                    continue;
                }
                for (int d : gens.degrees[static_cast<std::size_t>(v - 1)]) {
                    if (n + static_cast<std::size_t>(d) < next.size()) {
                        next[n + static_cast<std::size_t>(d)] += poly[n];
                    }
                }
            }
            poly = std::move(next);
        }
        for (std::size_t n = 0; n < poly.size(); ++n) {
            total[n] += poly[n];
        }
    }
    return total;
}

enum class Property {
    associativity,
    graded_commutativity,
    eta_ring_hom,
    restriction_ring_hom,
    restriction_inclusion_identity,
    integrality,
};

inline std::string property_name(Property p) {
    switch (p) {
        case Property::associativity: return "associativity";
        case Property::graded_commutativity: return "graded-commutativity";
        case Property::eta_ring_hom: return "eta-ring-hom";
        case Property::restriction_ring_hom: return "restriction-ring-hom";
        case Property::restriction_inclusion_identity: return "restriction-inclusion-identity";
        case Property::integrality: return "integrality";
    }
    return "unknown";
}

struct Counterexample {
    std::vector<std::string> inputs;
    std::string lhs;
    std::string rhs;
};

/// counterexample is present iff pass is false.
struct OracleReport {
    std::string instance;
    std::string property;
    bool pass = true;
    std::uint64_t checked = 0;
    std::optional<Counterexample> counterexample;
};

namespace detail {

inline OracleReport report(std::string instance, Property p) {
    OracleReport r;
    r.instance = std::move(instance);
    r.property = property_name(p);
    return r;
}

inline void fail(OracleReport& r, std::vector<std::string> inputs, std::string lhs, std::string rhs) {
    r.pass = false;
    r.counterexample = Counterexample{std::move(inputs), std::move(lhs), std::move(rhs)};
}

// Runs check(i) for each i; each returns its first failure. The reported
// failure is the one with the smallest i, independent of scheduling.
template <class Check>
std::optional<Counterexample> first_failure(std::size_t n, Check&& check) {
    std::vector<std::optional<Counterexample>> found(n);
    parallel_for(n, [&](std::size_t i) { found[i] = check(i); });
    for (auto& f : found) {
        if (f) {
            return f;
        }
    }
    return std::nullopt;
}

inline void finish(OracleReport& r, std::optional<Counterexample> cx) {
    if (cx) {
        r.pass = false;
        r.counterexample = std::move(cx);
    }
}

inline Sparse triple_left(const StructureTable& t, std::size_t i, std::size_t j, std::size_t k) {
    Sparse out;
    for (const auto& [mid, c] : t.products[i][j]) {
        accumulate(out, t.products[mid][k], c);
    }
    return out;
}

inline Sparse triple_right(const StructureTable& t, std::size_t i, std::size_t j, std::size_t k) {
    Sparse out;
    for (const auto& [mid, c] : t.products[j][k]) {
        accumulate(out, t.products[i][mid], c);
    }
    return out;
}

}  // namespace detail

/// (b_i b_j) b_k == b_i (b_j b_k) for every triple of the table.
inline OracleReport check_associativity(const StructureTable& t, std::string instance = {}) {
    OracleReport r = detail::report(std::move(instance), Property::associativity);
    std::size_t n = t.size();
    r.checked = static_cast<std::uint64_t>(n) * n * n;
    detail::finish(r, detail::first_failure(n, [&](std::size_t i) -> std::optional<Counterexample> {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = detail::triple_left(t, i, j, k);
                auto rhs = detail::triple_right(t, i, j, k);
                if (lhs != rhs) {
                    return Counterexample{{t.keys[i].label(), t.keys[j].label(), t.keys[k].label()},
                                          detail::render(t, lhs), detail::render(t, rhs)};
                }
            }
        }
        return std::nullopt;
    }));
    return r;
}

/// Associativity on `samples` uniformly drawn triples (fixed seed).
inline OracleReport check_associativity_sampled(const StructureTable& t, std::uint64_t samples, std::uint64_t seed,
                                                std::string instance = {}) {
    OracleReport r = detail::report(std::move(instance), Property::associativity);
    if (t.size() == 0) {
        return r;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        std::size_t k = pick(rng);
        ++r.checked;
        auto lhs = detail::triple_left(t, i, j, k);
        auto rhs = detail::triple_right(t, i, j, k);
        if (lhs != rhs) {
            detail::fail(r, {t.keys[i].label(), t.keys[j].label(), t.keys[k].label()}, detail::render(t, lhs),
                         detail::render(t, rhs));
            break;
        }
    }
    return r;
}

/// b_i b_j == (-1)^{|b_i||b_j|} b_j b_i for every pair.
inline OracleReport check_graded_commutativity(const StructureTable& t, std::string instance = {}) {
    OracleReport r = detail::report(std::move(instance), Property::graded_commutativity);
    std::size_t n = t.size();
    r.checked = static_cast<std::uint64_t>(n) * n;
    detail::finish(r, detail::first_failure(n, [&](std::size_t i) -> std::optional<Counterexample> {
        for (std::size_t j = 0; j < n; ++j) {
            detail::Sparse lhs;
            detail::Sparse rhs;
            detail::accumulate(lhs, t.products[i][j], 1);
            Rational sign = (t.degrees[i] % 2 != 0 && t.degrees[j] % 2 != 0) ? -1 : 1;
            detail::accumulate(rhs, t.products[j][i], sign);
            if (lhs != rhs) {
                return Counterexample{{t.keys[i].label(), t.keys[j].label()}, detail::render(t, lhs),
                                      detail::render(t, rhs)};
            }
        }
        return std::nullopt;
    }));
    return r;
}

/// Every structure constant is an integer lying in the ring.
inline OracleReport check_integrality(const StructureTable& t, const CoefficientRing& ring,
                                      std::string instance = {}) {
    OracleReport r = detail::report(std::move(instance), Property::integrality);
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            ++r.checked;
            for (const auto& [id, c] : t.products[i][j]) {
                if (!is_integral(c) || !ring.contains(c)) {
                    detail::fail(r, {t.keys[i].label(), t.keys[j].label()}, to_string(c), "an integer in " +
                                 ring.to_string());
                    return r;
                }
            }
        }
    }
    return r;
}

namespace detail {

inline void check_basis_bound(const WeightedAlgebra& a) {
    if (a.basis().size() > kMaxExhaustiveBasis) {
        throw BoundExceeded("exhaustive_check: basis has " + std::to_string(a.basis().size()) +
                            " elements, limit is " + std::to_string(kMaxExhaustiveBasis));
    }
}

inline std::string describe(const WeightedAlgebra& a) {
    std::string out = "m=" + std::to_string(a.m()) + " basis=" + std::to_string(a.basis().size()) +
                      " faces=" + std::to_string(a.complex().size()) + " ring=" + a.ring().to_string();
    return out;
}

}  // namespace detail

/// eta*(xy) computed by the engine equals the oracle star product of eta*(x), eta*(y).
inline OracleReport check_eta_ring_hom(const WeightedAlgebra& a) {
    OracleReport r = detail::report(detail::describe(a), Property::eta_ring_hom);
    StructureTable star = ordinary_star_algebra(a.generators(), a.complex());
    std::map<std::pair<FaceMask, std::vector<int>>, std::size_t> star_ids;
    for (std::size_t n = 0; n < star.size(); ++n) {
        star_ids[{star.keys[n].face, star.keys[n].index}] = n;
    }
    const auto& basis = a.basis();
    std::vector<AlgebraElement> images;
    for (const auto& b : basis) {
        images.push_back(eta_star(a, AlgebraElement::basis(b.key)));
    }
    std::size_t n = basis.size();
    r.checked = static_cast<std::uint64_t>(n) * n;
    detail::finish(r, detail::first_failure(n, [&](std::size_t i) -> std::optional<Counterexample> {
        for (std::size_t j = 0; j < n; ++j) {
            AlgebraElement lhs = eta_star(a, a.multiply(a.element(i), a.element(j)));
            AlgebraElement rhs;
            for (const auto& [ki, ci] : images[i].terms()) {
                for (const auto& [kj, cj] : images[j].terms()) {
                    std::size_t si = star_ids.at({ki.face, ki.index});
                    std::size_t sj = star_ids.at({kj.face, kj.index});
                    for (const auto& [id, c] : star.products[si][sj]) {
                        rhs.add(star.keys[id], ci * cj * c);
                    }
                }
            }
            if (!(lhs == rhs)) {
                return Counterexample{{basis[i].key.label(), basis[j].key.label()}, lhs.to_string(), rhs.to_string()};
            }
        }
        return std::nullopt;
    }));
    return r;
}

/// restrict(xy) == restrict(x) restrict(y) for every full subcomplex K_I.
inline OracleReport check_restriction_ring_hom(const WeightedAlgebra& a) {
    OracleReport r = detail::report(detail::describe(a), Property::restriction_ring_hom);
    const auto& basis = a.basis();
    std::size_t subsets = std::size_t{1} << a.m();
    detail::finish(r, detail::first_failure(subsets, [&](std::size_t sub) -> std::optional<Counterexample> {
        Simplex vertex_set = Simplex::from_mask(static_cast<FaceMask>(sub));
        SimplicialComplex l = full_subcomplex(a.complex(), vertex_set);
        WeightedAlgebra al = restricted_algebra(a, l);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                AlgebraElement lhs = restrict(a, l, a.multiply(a.element(i), a.element(j)));
                AlgebraElement rhs =
                    al.multiply(restrict(a, l, a.element(i)), restrict(a, l, a.element(j)));
                if (!(lhs == rhs)) {
                    return Counterexample{{vertex_set.to_string(), basis[i].key.label(), basis[j].key.label()},
                                          lhs.to_string(), rhs.to_string()};
                }
            }
        }
        return std::nullopt;
    }));
    r.checked = static_cast<std::uint64_t>(subsets) * basis.size() * basis.size();
    return r;
}

/// restrict(K -> K_I) after include(K_I -> K) is the identity on every basis element of K_I.
inline OracleReport check_restriction_inclusion_identity(const WeightedAlgebra& a) {
    OracleReport r = detail::report(detail::describe(a), Property::restriction_inclusion_identity);
    std::size_t subsets = std::size_t{1} << a.m();
    for (std::size_t sub = 0; sub < subsets && r.pass; ++sub) {
        Simplex vertex_set = Simplex::from_mask(static_cast<FaceMask>(sub));
        SimplicialComplex l = full_subcomplex(a.complex(), vertex_set);
        WeightedAlgebra al = restricted_algebra(a, l);
        for (const auto& b : al.basis()) {
            ++r.checked;
            AlgebraElement x = AlgebraElement::basis(b.key, Rational(3, 2));
            AlgebraElement round_trip = restrict(a, l, include_full_subcomplex(a, vertex_set, x));
            if (!(round_trip == x)) {
                detail::fail(r, {vertex_set.to_string(), b.key.label()}, round_trip.to_string(), x.to_string());
                break;
            }
        }
    }
    return r;
}

/// Exhaustive check of one property over the whole basis (at most 512 elements).
inline OracleReport exhaustive_check(const WeightedAlgebra& a, Property property) {
    detail::check_basis_bound(a);
    switch (property) {
        case Property::associativity: return check_associativity(structure_table(a), detail::describe(a));
        case Property::graded_commutativity:
            return check_graded_commutativity(structure_table(a), detail::describe(a));
        case Property::eta_ring_hom: return check_eta_ring_hom(a);
        case Property::restriction_ring_hom: return check_restriction_ring_hom(a);
        case Property::restriction_inclusion_identity: return check_restriction_inclusion_identity(a);
        case Property::integrality: return check_integrality(structure_table(a), a.ring(), detail::describe(a));
    }
    throw PreconditionError("exhaustive_check: unknown property");
}

}  // namespace wpp::oracle

#endif  // WPP_ORACLE_HPP
