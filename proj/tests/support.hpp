#ifndef WPP_TESTS_SUPPORT_HPP
#define WPP_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wpp/complex.hpp"
#include "wpp/integer.hpp"
#include "wpp/sequences.hpp"

namespace wpp::test {

inline std::vector<Integer> divisors_of(const Integer& n) {
    std::vector<Integer> out;
    for (Integer d = 1; d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

// Random power table: each entry on a face is a divisor of `bound` that is a
// multiple of every entry on the facets. With normalized, c_i^{i} = 1.
inline PowerTable random_power_table(int m, std::mt19937_64& rng, const Integer& bound, bool normalized) {
    std::vector<Integer> divs = divisors_of(bound);
    PowerTable t = PowerTable::ones(m);
    for (FaceMask sigma : ordered_subsets(m)) {
        for (int i = 1; i <= m; ++i) {
            if (((sigma >> (i - 1)) & 1U) == 0) {
                continue;
            }
            if (normalized && std::popcount(sigma) == 1) {
                continue;
            }
            Integer lo = 1;
            for (int k = 1; k <= m; ++k) {
                FaceMask bit = FaceMask{1} << (k - 1);
                if (k != i && (sigma & bit) != 0) {
                    lo = lcm(lo, t.at(sigma & ~bit, i));
                }
            }
            std::vector<Integer> options;
            for (const auto& d : divs) {
                if (d % lo == 0) {
                    options.push_back(d);
                }
            }
            std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
            t.at(sigma, i) = options[pick(rng)];
        }
    }
    return t;
}

inline PowerSequence random_power_sequence(int m, std::mt19937_64& rng, const Integer& bound = 60,
                                           bool normalized = true) {
    return PowerSequence::from_table(random_power_table(m, rng, bound, normalized));
}

// Random complex on [m]: downward closure of a random family of faces.
inline SimplicialComplex random_complex(int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<FaceMask> pick(0, (FaceMask{1} << m) - 1);
    std::uniform_int_distribution<int> count(1, m + 1);
    std::vector<FaceMask> gens;
    for (int n = count(rng); n > 0; --n) {
        gens.push_back(pick(rng));
    }
    return SimplicialComplex::from_generating_masks(m, gens);
}

}  // namespace wpp::test

#endif  // WPP_TESTS_SUPPORT_HPP
