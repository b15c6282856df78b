#ifndef WPP_COMPLEX_HPP
#define WPP_COMPLEX_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpp/error.hpp"

namespace wpp {

inline constexpr int kMaxVertices = 20;

// Bit (v-1) set <=> vertex v present. Table index for every 2^m-sized table.
using FaceMask = std::uint32_t;

namespace detail {

inline void check_universe(int m, const char* who) {
    if (m < 1 || m > kMaxVertices) {
        throw PreconditionError(std::string(who) + ": vertex universe size must be in 1.." +
                                std::to_string(kMaxVertices) + ", got " + std::to_string(m));
    }
}

inline FaceMask universe_mask(int m) { return m >= 32 ? ~FaceMask{0} : (FaceMask{1} << m) - 1; }

// Same-size masks compare like their sorted vertex lists: the list holding
// the lowest vertex of the symmetric difference comes first.
inline bool lex_less_same_size(FaceMask a, FaceMask b) {
    FaceMask diff = a ^ b;
    if (diff == 0) {
        return false;
    }
    FaceMask lowest = diff & (~diff + 1);
    return (a & lowest) != 0;
}

inline bool face_order_less(FaceMask a, FaceMask b) {
    int ca = std::popcount(a);
    int cb = std::popcount(b);
    if (ca != cb) {
        return ca < cb;
    }
    return lex_less_same_size(a, b);
}

}  // namespace detail

/// A face of the full simplex on [m], carried as its sorted vertex set.
/// The empty simplex is an ordinary value.
class Simplex {
public:
    Simplex() = default;

    /// Vertices must be strictly increasing and lie in 1..kMaxVertices.
    explicit Simplex(const std::vector<int>& vertices) {
        int previous = 0;
        for (int v : vertices) {
            if (v < 1 || v > kMaxVertices) {
                throw PreconditionError("vertex " + std::to_string(v) + " out of range");
            }
            if (v <= previous) {
                throw PreconditionError("simplex vertices must be strictly increasing");
            }
            previous = v;
            mask_ |= bit(v);
        }
    }

    /// Accepts any order; rejects repeated vertices.
    static Simplex from_unsorted(std::vector<int> vertices) {
        std::sort(vertices.begin(), vertices.end());
        if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
            throw PreconditionError("duplicate vertex within one face");
        }
        return Simplex(vertices);
    }

    static Simplex from_mask(FaceMask mask) {
        Simplex s;
        s.mask_ = mask;
        return s;
    }

    FaceMask mask() const { return mask_; }
    int size() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int v) const { return v >= 1 && v <= kMaxVertices && (mask_ & bit(v)) != 0; }
    bool is_subset_of(const Simplex& other) const { return (mask_ & ~other.mask_) == 0; }
    bool disjoint_from(const Simplex& other) const { return (mask_ & other.mask_) == 0; }

    /// Largest vertex, 0 for the empty simplex.
    int max_vertex() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (FaceMask rest = mask_; rest != 0; rest &= rest - 1) {
            out.push_back(std::countr_zero(rest) + 1);
        }
        return out;
    }

    Simplex unite(const Simplex& other) const { return from_mask(mask_ | other.mask_); }
    Simplex intersect(const Simplex& other) const { return from_mask(mask_ & other.mask_); }
    Simplex minus(const Simplex& other) const { return from_mask(mask_ & ~other.mask_); }

    /// "[1,2,3]", "[]" for the empty simplex.
    std::string to_string() const {
        std::string out = "[";
        bool first = true;
        for (int v : vertices()) {
            if (!first) {
                out += ',';
            }
            out += std::to_string(v);
            first = false;
        }
        return out + "]";
    }

    friend bool operator==(const Simplex&, const Simplex&) = default;

    /// (cardinality, lexicographic) order.
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
        if (a.mask_ == b.mask_) {
            return std::strong_ordering::equal;
        }
        return detail::face_order_less(a.mask_, b.mask_) ? std::strong_ordering::less
                                                          : std::strong_ordering::greater;
    }

private:
    static FaceMask bit(int v) { return FaceMask{1} << (v - 1); }

    FaceMask mask_ = 0;
};

/// All 2^m subsets of [m] in (cardinality, lexicographic) order.
inline std::vector<FaceMask> ordered_subsets(int m) {
    detail::check_universe(m, "ordered_subsets");
    std::vector<FaceMask> out(std::size_t{1} << m);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = static_cast<FaceMask>(k);
    }
    std::sort(out.begin(), out.end(), detail::face_order_less);
    return out;
}

/// Subsets of `mask` (including itself and 0) in (cardinality, lexicographic) order.
inline std::vector<FaceMask> ordered_submasks(FaceMask mask) {
    std::vector<FaceMask> out;
    for (FaceMask sub = mask;; sub = (sub - 1) & mask) {
        out.push_back(sub);
        if (sub == 0) {
            break;
        }
    }
    std::sort(out.begin(), out.end(), detail::face_order_less);
    return out;
}

/// Downward-closed family of faces of the full simplex on [m]. Vertices
/// of [m] that are not faces are ghost vertices. Always contains the empty face.
class SimplicialComplex {
public:
    static SimplicialComplex from_maximal_faces(int m, const std::vector<std::vector<int>>& maximal) {
        detail::check_universe(m, "from_maximal_faces");
        std::vector<FaceMask> generators;
        generators.reserve(maximal.size());
        for (const auto& face : maximal) {
            for (int v : face) {
                if (v < 1 || v > m) {
                    throw PreconditionError("vertex " + std::to_string(v) + " out of range 1.." +
                                            std::to_string(m));
                }
            }
            generators.push_back(Simplex::from_unsorted(face).mask());
        }
        return from_generating_masks(m, generators);
    }

    static SimplicialComplex from_maximal_faces(int m, const std::vector<Simplex>& maximal) {
        std::vector<std::vector<int>> lists;
        lists.reserve(maximal.size());
        for (const auto& s : maximal) {
            lists.push_back(s.vertices());
        }
        return from_maximal_faces(m, lists);
    }

    static SimplicialComplex full_simplex(int m) {
        detail::check_universe(m, "full_simplex");
        return from_generating_masks(m, {detail::universe_mask(m)});
    }

    /// All proper faces of sigma, on the universe [m] (m = 0 means max vertex of sigma).
    static SimplicialComplex boundary(const Simplex& sigma, int m = 0) {
        if (sigma.empty()) {
            throw PreconditionError("boundary of the empty simplex is undefined");
        }
        if (m == 0) {
            m = sigma.max_vertex();
        }
        detail::check_universe(m, "boundary");
        if (sigma.max_vertex() > m) {
            throw PreconditionError("simplex " + sigma.to_string() + " exceeds universe " + std::to_string(m));
        }
        std::vector<FaceMask> facets;
        for (int v : sigma.vertices()) {
            facets.push_back(sigma.mask() & ~(FaceMask{1} << (v - 1)));
        }
        return from_generating_masks(m, facets);
    }

    /// Downward closure of arbitrary masks on [m]; masks must fit the universe.
    static SimplicialComplex from_generating_masks(int m, const std::vector<FaceMask>& generators) {
        detail::check_universe(m, "SimplicialComplex");
        SimplicialComplex k;
        k.m_ = m;
        k.member_.assign(std::size_t{1} << m, false);
        k.member_[0] = true;
        for (FaceMask g : generators) {
            if ((g & ~detail::universe_mask(m)) != 0) {
                throw PreconditionError("face outside vertex universe");
            }
            if (k.member_[g]) {
                continue;
            }
            for (FaceMask sub = g;; sub = (sub - 1) & g) {
                k.member_[sub] = true;
                if (sub == 0) {
                    break;
                }
            }
        }
        for (FaceMask f : ordered_subsets(m)) {
            if (k.member_[f]) {
                k.faces_.push_back(f);
            }
        }
        return k;
    }

    int m() const { return m_; }
    std::size_t size() const { return faces_.size(); }

    bool contains(const Simplex& s) const { return contains_mask(s.mask()); }
    bool contains_mask(FaceMask f) const { return f < member_.size() && member_[f]; }

    /// Faces in (cardinality, lexicographic) order.
    const std::vector<FaceMask>& face_masks() const { return faces_; }

    std::vector<Simplex> faces() const {
        std::vector<Simplex> out;
        out.reserve(faces_.size());
        for (FaceMask f : faces_) {
            out.push_back(Simplex::from_mask(f));
        }
        return out;
    }

    std::vector<Simplex> maximal_faces() const {
        std::vector<Simplex> out;
        for (FaceMask f : faces_) {
            bool maximal = true;
            for (int v = 1; v <= m_ && maximal; ++v) {
                FaceMask b = FaceMask{1} << (v - 1);
                if ((f & b) == 0 && member_[f | b]) {
                    maximal = false;
                }
            }
            if (maximal) {
                out.push_back(Simplex::from_mask(f));
            }
        }
        return out;
    }

    bool is_subcomplex_of(const SimplicialComplex& other) const {
        if (m_ != other.m_) {
            return false;
        }
        return std::all_of(faces_.begin(), faces_.end(), [&](FaceMask f) { return other.member_[f]; });
    }

    /// The face sigma when this complex is the closure of a single face.
    std::optional<Simplex> as_simplex() const {
        FaceMask top = 0;
        for (FaceMask f : faces_) {
            top |= f;
        }
        if (!member_[top]) {
            return std::nullopt;
        }
        return Simplex::from_mask(top);
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.m_ == b.m_ && a.faces_ == b.faces_;
    }

private:
    SimplicialComplex() = default;

    int m_ = 0;
    std::vector<bool> member_;
    std::vector<FaceMask> faces_;
};

/// Faces of K whose vertices lie in I, on the same universe.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& k, const Simplex& vertex_set) {
    if (vertex_set.max_vertex() > k.m()) {
        throw PreconditionError("vertex set " + vertex_set.to_string() + " not inside [" + std::to_string(k.m()) +
                                "]");
    }
    std::vector<FaceMask> kept;
    for (FaceMask f : k.face_masks()) {
        if ((f & ~vertex_set.mask()) == 0) {
            kept.push_back(f);
        }
    }
    return SimplicialComplex::from_generating_masks(k.m(), kept);
}

}  // namespace wpp

#endif  // WPP_COMPLEX_HPP
