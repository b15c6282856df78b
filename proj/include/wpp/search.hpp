#ifndef WPP_SEARCH_HPP
#define WPP_SEARCH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wpp/complex.hpp"
#include "wpp/error.hpp"
#include "wpp/integer.hpp"
#include "wpp/parallel.hpp"
#include "wpp/sequences.hpp"

namespace wpp {

struct PreimageResult {
    std::optional<PowerSequence> witness;
    std::uint64_t nodes = 0;  // face assignments tried

    bool found() const { return witness.has_value(); }
};

namespace detail {

class PreimageSearch {
public:
    explicit PreimageSearch(const CoefficientSequence& cs) : cs_(cs), table_(PowerTable::ones(cs.m())) {
        for (FaceMask f : ordered_subsets(cs.m())) {
            if (std::popcount(f) >= 2) {
                faces_.push_back(f);
            }
        }
    }

    PreimageResult run() {
        PreimageResult r;
        if (descend(0)) {
            r.witness = PowerSequence::from_table(table_);
        }
        r.nodes = nodes_;
        return r;
    }

private:
    bool descend(std::size_t k) {
        if (k == faces_.size()) {
            return true;
        }
        FaceMask sigma = faces_[k];
        std::vector<int> verts = Simplex::from_mask(sigma).vertices();

        // Each c_i^sigma must be a multiple of every c_i^tau on the facets tau.
        std::vector<Integer> floor(verts.size(), 1);
        Integer floor_product = 1;
        for (std::size_t a = 0; a < verts.size(); ++a) {
            for (int v : verts) {
                if (v == verts[a]) {
                    continue;
                }
                FaceMask tau = sigma & ~(FaceMask{1} << (v - 1));
                floor[a] = lcm(floor[a], table_.at(tau, verts[a]));
            }
            floor_product *= floor[a];
        }
        const Integer& target = cs_.value(sigma);
        if (target % floor_product != 0) {
            ++nodes_;
            return false;
        }
        auto spare = factorize(target / floor_product);

        // Distribute the exponents of the spare part; positions run
        // vertex-major, prime-minor, each ascending, so candidates come out in
        // lexicographic order of the exponent tuples.
        std::vector<unsigned> remaining;
        for (const auto& pp : spare) {
            remaining.push_back(pp.exponent);
        }
        std::vector<unsigned> chosen(verts.size() * spare.size(), 0);

        auto assign_and_recurse = [&]() -> bool {
            ++nodes_;
            for (std::size_t a = 0; a < verts.size(); ++a) {
                Integer value = floor[a];
                for (std::size_t q = 0; q < spare.size(); ++q) {
                    value *= ipow(spare[q].prime, chosen[a * spare.size() + q]);
                }
                table_.at(sigma, verts[a]) = std::move(value);
            }
            if (descend(k + 1)) {
                return true;
            }
            for (int v : verts) {
                table_.at(sigma, v) = 1;
            }
            return false;
        };

        std::size_t positions = chosen.size();
        std::size_t last_vertex_start = (verts.size() - 1) * spare.size();
        auto fill = [&](auto&& self, std::size_t pos) -> bool {
            if (pos == last_vertex_start) {
                for (std::size_t q = 0; q < spare.size(); ++q) {
                    chosen[pos + q] = remaining[q];
                }
                return assign_and_recurse();
            }
            std::size_t q = pos % spare.size();
            unsigned budget = remaining[q];
            for (unsigned x = 0; x <= budget; ++x) {
                chosen[pos] = x;
                remaining[q] = budget - x;
                if (self(self, pos + 1)) {
                    return true;
                }
            }
            remaining[q] = budget;
            return false;
        };
        if (positions == 0) {
            return assign_and_recurse();
        }
        return fill(fill, 0);
    }

    const CoefficientSequence& cs_;
    PowerTable table_;
    std::vector<FaceMask> faces_;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Decides whether cs lies in the image of phi. Depth-first over faces in
/// (cardinality, lexicographic) order; per face, the ordered factorizations of
/// cs_sigma compatible with the facets are tried in lexicographic order of
/// their exponent tuples. Complete: every entry divides cs_sigma, so the
/// space is finite, and exhaustion certifies that no preimage exists.
inline PreimageResult phi_preimage_search(const CoefficientSequence& cs) {
    return detail::PreimageSearch(cs).run();
}

struct PhiImage {
    std::vector<CoefficientTable> image;  // deduplicated, canonical order
    std::uint64_t power_sequences = 0;    // tables enumerated
};

/// (max_exponent + 1) raised to the number of free entries, m * 2^(m-1) - m.
inline double phi_image_search_size(int m, int max_exponent) {
    double entries = static_cast<double>(m) * std::ldexp(1.0, m - 1) - m;
    return std::pow(static_cast<double>(max_exponent + 1), entries);
}

namespace detail {

class ImageEnumerator {
public:
    ImageEnumerator(int m, int max_exponent) : m_(m), max_exponent_(max_exponent) {
        for (FaceMask f : ordered_subsets(m)) {
            if (std::popcount(f) >= 2) {
                faces_.push_back(f);
            }
        }
        exponents_.assign((std::size_t{1} << m) * static_cast<std::size_t>(m), 0);
        face_sum_.assign(std::size_t{1} << m, 0);
    }

    // Candidate exponent tuples for the first face (all of them are feasible).
    std::vector<std::vector<int>> first_face_choices() const {
        std::vector<std::vector<int>> out;
        if (faces_.empty()) {
            return out;
        }
        std::vector<int> lo(static_cast<std::size_t>(std::popcount(faces_[0])), 0);
        std::vector<int> cur = lo;
        collect(cur, lo, 0, out);
        return out;
    }

    void run_from(const std::vector<int>* first_choice, std::set<std::vector<int>>& sink, std::uint64_t& count) {
        sink_ = &sink;
        count_ = &count;
        if (faces_.empty()) {
            record();
            return;
        }
        if (first_choice != nullptr) {
            apply(0, *first_choice);
            descend(1);
            return;
        }
        descend(0);
    }

private:
    std::size_t idx(FaceMask f, int v) const {
        return static_cast<std::size_t>(f) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(v - 1);
    }

    void collect(std::vector<int>& cur, const std::vector<int>& lo, std::size_t pos,
                 std::vector<std::vector<int>>& out) const {
        if (pos == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (int x = lo[pos]; x <= max_exponent_; ++x) {
            cur[pos] = x;
            collect(cur, lo, pos + 1, out);
        }
    }

    void apply(std::size_t k, const std::vector<int>& choice) {
        FaceMask sigma = faces_[k];
        auto verts = Simplex::from_mask(sigma).vertices();
        int sum = 0;
        for (std::size_t a = 0; a < verts.size(); ++a) {
            exponents_[idx(sigma, verts[a])] = choice[a];
            sum += choice[a];
        }
        face_sum_[sigma] = sum;
    }

    void descend(std::size_t k) {
        if (k == faces_.size()) {
            record();
            return;
        }
        FaceMask sigma = faces_[k];
        auto verts = Simplex::from_mask(sigma).vertices();
        std::vector<int> lo(verts.size(), 0);
        for (std::size_t a = 0; a < verts.size(); ++a) {
            for (int v : verts) {
                if (v != verts[a]) {
                    FaceMask tau = sigma & ~(FaceMask{1} << (v - 1));
                    lo[a] = std::max(lo[a], exponents_[idx(tau, verts[a])]);
                }
            }
        }
        std::vector<std::vector<int>> choices;
        std::vector<int> cur = lo;
        collect(cur, lo, 0, choices);
        for (const auto& c : choices) {
            apply(k, c);
            descend(k + 1);
        }
    }

    void record() {
        ++*count_;
        std::vector<int> key;
        key.reserve(face_sum_.size());
        for (FaceMask f : ordered_subsets(m_)) {
            key.push_back(face_sum_[f]);
        }
        sink_->insert(std::move(key));
    }

    int m_;
    int max_exponent_;
    std::vector<FaceMask> faces_;
    std::vector<int> exponents_;
    std::vector<int> face_sum_;
    std::set<std::vector<int>>* sink_ = nullptr;
    std::uint64_t* count_ = nullptr;
};

}  // namespace detail

/// Image of phi over all power sequences (with c_i^{i} = 1) whose entries lie
/// in {1, p, ..., p^max_exponent}. Refuses m > 4 or max_exponent > 2.
inline PhiImage enumerate_phi_image(int m, const Integer& p, int max_exponent) {
    detail::check_universe(m, "enumerate_phi_image");
    detail::check_prime(p);
    if (max_exponent < 0) {
        throw PreconditionError("enumerate_phi_image: max_exponent must be non-negative");
    }
    if (m > 4 || max_exponent > 2) {
        throw BoundExceeded("enumerate_phi_image: m <= 4 and max_exponent <= 2 required; unconstrained search size ~" +
                            std::to_string(phi_image_search_size(m, max_exponent)) + " tables");
    }
    detail::ImageEnumerator root(m, max_exponent);
    auto firsts = root.first_face_choices();
    std::set<std::vector<int>> merged;
    std::uint64_t total = 0;
    if (firsts.empty()) {
        root.run_from(nullptr, merged, total);
    } else {
        std::vector<std::set<std::vector<int>>> parts(firsts.size());
        std::vector<std::uint64_t> counts(firsts.size(), 0);
        parallel_for(firsts.size(), [&](std::size_t k) {
            detail::ImageEnumerator worker(m, max_exponent);
            worker.run_from(&firsts[k], parts[k], counts[k]);
        });
        for (std::size_t k = 0; k < parts.size(); ++k) {
            merged.insert(parts[k].begin(), parts[k].end());
            total += counts[k];
        }
    }
    PhiImage out;
    out.power_sequences = total;
    auto order = ordered_subsets(m);
    for (const auto& key : merged) {
        CoefficientTable t = CoefficientTable::ones(m);
        for (std::size_t k = 0; k < order.size(); ++k) {
            t.values[order[k]] = ipow(p, static_cast<unsigned>(key[k]));
        }
        out.image.push_back(std::move(t));
    }
    return out;
}

}  // namespace wpp

#endif  // WPP_SEARCH_HPP
