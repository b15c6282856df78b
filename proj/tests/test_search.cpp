#include <algorithm>
#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "wpp/search.hpp"

using namespace wpp;

namespace {

CoefficientSequence over_z(CoefficientTable t) { return CoefficientSequence::from_table(std::move(t), CoefficientRing::integers()); }

CoefficientTable non_realizable_table() {
    CoefficientTable t = CoefficientTable::ones(3);
    for (FaceMask f : ordered_subsets(3)) {
        if (std::popcount(f) >= 2) {
            t.at(f) = 2;
        }
    }
    return t;
}

// Brute force: every combination of ordered factorizations of the target
// value on each face with |sigma| >= 2, then full validation. No pruning.
void factorizations(const Integer& n, std::size_t parts, std::vector<Integer>& cur,
                    std::vector<std::vector<Integer>>& out) {
    if (parts == 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (const auto& d : test::divisors_of(n)) {
        cur.push_back(d);
        factorizations(n / d, parts - 1, cur, out);
        cur.pop_back();
    }
}

bool brute_force_realizable(const CoefficientTable& t) {
    std::vector<FaceMask> faces;
    std::vector<std::vector<std::vector<Integer>>> options;
    for (FaceMask f : ordered_subsets(t.m)) {
        if (std::popcount(f) < 2) {
            continue;
        }
        faces.push_back(f);
        std::vector<Integer> cur;
        options.emplace_back();
        factorizations(t.at(f), static_cast<std::size_t>(std::popcount(f)), cur, options.back());
    }
    std::vector<std::size_t> idx(faces.size(), 0);
    while (true) {
        PowerTable p = PowerTable::ones(t.m);
        for (std::size_t k = 0; k < faces.size(); ++k) {
            std::vector<int> verts = Simplex::from_mask(faces[k]).vertices();
            for (std::size_t a = 0; a < verts.size(); ++a) {
                p.at(faces[k], verts[a]) = options[k][idx[k]][a];
            }
        }
        if (validate_power_sequence(p).ok()) {
            return true;
        }
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == options[pos].size()) {
            idx[pos++] = 0;
        }
        if (pos == idx.size()) {
            return false;
        }
    }
}

}  // namespace

TEST(Preimage, NonRealizableSequenceHasNone) {
    PreimageResult r = phi_preimage_search(over_z(non_realizable_table()));
    EXPECT_FALSE(r.found());
    EXPECT_GT(r.nodes, 0U);
}

TEST(Preimage, EdgeWitnessMultipliesToValue) {
    for (int n = 1; n <= 100; ++n) {
        CoefficientTable t = CoefficientTable::ones(2);
        t.at(3) = n;
        PreimageResult r = phi_preimage_search(over_z(t));
        ASSERT_TRUE(r.found()) << n;
        EXPECT_EQ(r.witness->entry(FaceMask{3}, 1) * r.witness->entry(FaceMask{3}, 2), n);
    }
}

TEST(Preimage, FirstWitnessIsLexicographicallySmallest) {
    CoefficientTable t = CoefficientTable::ones(2);
    t.at(3) = 6;
    PreimageResult r = phi_preimage_search(over_z(t));
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.witness->entry(FaceMask{3}, 1), 1);
    EXPECT_EQ(r.witness->entry(FaceMask{3}, 2), 6);
}

TEST(Preimage, SymmetricPatternHasWitness) {
    // 1, p, p^2 by face size: the image of the non-injectivity pair.
    CoefficientTable t = CoefficientTable::ones(3);
    for (FaceMask f : ordered_subsets(3)) {
        t.at(f) = std::popcount(f) == 2 ? 3 : (std::popcount(f) == 3 ? 9 : 1);
    }
    PreimageResult r = phi_preimage_search(over_z(t));
    ASSERT_TRUE(r.found());
    EXPECT_EQ(phi_table(*r.witness), t);
    // Faces in order [1,2],[1,3],[2,3],[1,2,3], smallest exponent tuples first.
    EXPECT_EQ(r.witness->table().rows[Simplex({1, 2}).mask()], (std::vector<Integer>{1, 3, 1}));
    EXPECT_EQ(r.witness->table().rows[Simplex({1, 2, 3}).mask()], (std::vector<Integer>{1, 3, 3}));
}

TEST(Preimage, RoundTripOnRandomImages) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 2 + trial % 3;
        CoefficientSequence cs = phi(test::random_power_sequence(m, rng, 12));
        PreimageResult r = phi_preimage_search(cs);
        ASSERT_TRUE(r.found());
        EXPECT_EQ(phi(*r.witness), cs);
    }
}

TEST(Preimage, AgreesWithBruteForceOnSmallTables) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> edge(1, 4);
    std::uniform_int_distribution<int> top_mult(1, 4);
    int found = 0;
    int none = 0;
    for (int trial = 0; trial < 150; ++trial) {
        CoefficientTable t = CoefficientTable::ones(3);
        for (FaceMask f : ordered_subsets(3)) {
            if (std::popcount(f) == 2) {
                t.at(f) = edge(rng);
            }
        }
        Integer l = lcm(lcm(t.at(3), t.at(5)), t.at(6));
        t.at(7) = l * top_mult(rng);
        if (!validate_coefficient_sequence(t, CoefficientRing::integers()).ok() || t.at(7) > 24) {
            continue;
        }
        bool brute = brute_force_realizable(t);
        PreimageResult r = phi_preimage_search(over_z(t));
        ASSERT_EQ(r.found(), brute) << "top " << t.at(7);
        (brute ? found : none)++;
    }
    EXPECT_GT(found, 0);
    EXPECT_GT(none, 0);
}

TEST(Preimage, SingleVertex) {
    PreimageResult r = phi_preimage_search(over_z(CoefficientTable::ones(1)));
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.witness->table(), PowerTable::ones(1));
}

TEST(PhiImage, TwoVertices) {
    PhiImage img = enumerate_phi_image(2, 2, 1);
    EXPECT_EQ(img.power_sequences, 4U);
    std::vector<Integer> edge;
    for (const auto& t : img.image) {
        edge.push_back(t.at(3));
    }
    EXPECT_EQ(edge, (std::vector<Integer>{1, 2, 4}));
}

TEST(PhiImage, ThreeVerticesExcludesNonRealizable) {
    PhiImage img = enumerate_phi_image(3, 2, 1);
    // Per vertex: monotone 0/1 functions on the three faces above it with value 0 at the vertex.
    EXPECT_EQ(img.power_sequences, 125U);
    EXPECT_EQ(std::count(img.image.begin(), img.image.end(), non_realizable_table()), 0);
    EXPECT_EQ(std::count(img.image.begin(), img.image.end(), CoefficientTable::ones(3)), 1);
}

TEST(PhiImage, RefusesLargeRequests) {
    EXPECT_THROW(enumerate_phi_image(5, 2, 1), BoundExceeded);
    EXPECT_THROW(enumerate_phi_image(3, 2, 3), BoundExceeded);
    EXPECT_THROW(enumerate_phi_image(3, 4, 1), PreconditionError);
}

TEST(PhiImage, IndependentOfThreadCount) {
    setenv("WPP_THREADS", "1", 1);
    PhiImage one = enumerate_phi_image(3, 3, 2);
    setenv("WPP_THREADS", "4", 1);
    PhiImage four = enumerate_phi_image(3, 3, 2);
    unsetenv("WPP_THREADS");
    EXPECT_EQ(one.image, four.image);
    EXPECT_EQ(one.power_sequences, four.power_sequences);
}
