#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "wpp/sequences.hpp"

using namespace wpp;

namespace {

FaceMask mask(std::vector<int> v) { return Simplex(v).mask(); }

PowerTable example_minimal() {
    PowerTable t = PowerTable::ones(3);
    t.at(mask({1}), 1) = 2;
    t.at(mask({2}), 2) = 3;
    t.at(mask({3}), 3) = 5;
    t.rows[mask({1, 2})] = {2, 3, 1};
    t.rows[mask({1, 3})] = {2, 1, 5};
    t.rows[mask({2, 3})] = {1, 3, 5};
    t.rows[mask({1, 2, 3})] = {2, 3, 5};
    return t;
}

// s = 2, t = 3: (2,3) -> (1,q,sr), (1,2,3) -> (p,q,tsr).
PowerTable example_variant() {
    PowerTable t = example_minimal();
    t.rows[mask({2, 3})] = {1, 3, 10};
    t.rows[mask({1, 2, 3})] = {2, 3, 30};
    return t;
}

// Independent product over the face vertices.
Integer product_over_face(const PowerTable& t, FaceMask sigma) {
    Integer out = 1;
    for (int i = 1; i <= t.m; ++i) {
        if ((sigma >> (i - 1)) & 1U) {
            out *= t.at(sigma, i);
        }
    }
    return out;
}

}  // namespace

TEST(PowerSequence, SampleTablesAreValid) {
    EXPECT_TRUE(validate_power_sequence(example_minimal()).ok());
    EXPECT_TRUE(validate_power_sequence(example_variant()).ok());
}

TEST(PowerSequence, MinimalConstructorReproducesSample) {
    EXPECT_EQ(minimal_power_sequence(3, {2, 3, 5}).table(), example_minimal());
    EXPECT_EQ(minimal_power_sequence(2, {4, 6}).entry(Simplex({1, 2}), 1), 4);
    EXPECT_EQ(minimal_power_sequence(2, {4, 6}).entry(Simplex({1, 2}), 2), 6);
    EXPECT_EQ(minimal_power_sequence(3, {1, 1, 1}).table(), PowerTable::ones(3));
}

TEST(PowerSequence, DivisibilityViolationNamesTauSigmaVertex) {
    PowerTable t = PowerTable::ones(2);
    t.at(mask({1}), 1) = 2;
    t.at(mask({1, 2}), 1) = 3;
    auto r = validate_power_sequence(t);
    ASSERT_FALSE(r.ok());
    ASSERT_EQ(r.violations.size(), 1U);
    EXPECT_EQ(r.violations[0].kind, PowerViolation::Kind::divisibility);
    EXPECT_EQ(r.violations[0].tau, Simplex({1}));
    EXPECT_EQ(r.violations[0].sigma, Simplex({1, 2}));
    EXPECT_EQ(r.violations[0].vertex, 1);
}

TEST(PowerSequence, OffFaceEntryRejected) {
    PowerTable t = PowerTable::ones(2);
    t.at(mask({1}), 2) = 2;
    auto r = validate_power_sequence(t);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations[0].kind, PowerViolation::Kind::off_face);
}

TEST(PowerSequence, ShapeErrors) {
    PowerTable t = PowerTable::ones(2);
    t.rows.pop_back();
    EXPECT_THROW(validate_power_sequence(t), ParseError);
    PowerTable z = PowerTable::ones(2);
    z.at(mask({1}), 1) = 0;
    EXPECT_THROW(validate_power_sequence(z), PreconditionError);
}

TEST(Ratio, VariantValues) {
    PowerSequence minimal = PowerSequence::from_table(example_minimal());
    PowerSequence variant = PowerSequence::from_table(example_variant());
    Simplex sigma({1, 2, 3});
    Simplex tau({1, 3});
    EXPECT_EQ(ratio(minimal, tau, sigma), (std::vector<Integer>{1, 3, 1}));
    // c^{123}/c^{13} = (p/p, q/1, tsr/r) = (1, q, ts).
    EXPECT_EQ(ratio(variant, tau, sigma), (std::vector<Integer>{1, 3, 6}));
    EXPECT_EQ(ratio(variant, sigma, sigma), (std::vector<Integer>{1, 1, 1}));
    EXPECT_THROW(ratio(variant, Simplex({2}), tau), PreconditionError);
}

TEST(Ratio, ChainRuleOnRandomSequences) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 2 + trial % 3;
        PowerSequence ps = test::random_power_sequence(m, rng, 60, false);
        for (FaceMask sigma : ordered_subsets(m)) {
            for (FaceMask tau : ordered_submasks(sigma)) {
                for (FaceMask mu : ordered_submasks(tau)) {
                    auto st = ratio(ps, Simplex::from_mask(tau), Simplex::from_mask(sigma));
                    auto tm = ratio(ps, Simplex::from_mask(mu), Simplex::from_mask(tau));
                    auto sm = ratio(ps, Simplex::from_mask(mu), Simplex::from_mask(sigma));
                    for (int i = 0; i < m; ++i) {
                        ASSERT_EQ(st[i] * tm[i], sm[i]);
                    }
                }
            }
        }
    }
}

TEST(Phi, AllOnesMapsToAllOnes) {
    auto cs = phi(PowerSequence::from_table(PowerTable::ones(4)));
    EXPECT_EQ(cs.table(), CoefficientTable::ones(4));
}

TEST(Phi, RequiresTrivialVertexEntries) {
    PowerSequence ps = PowerSequence::from_table(example_minimal());
    EXPECT_FALSE(ps.normalized_on_vertices());
    EXPECT_EQ(ps.first_unnormalized_vertex(), 1);
    EXPECT_THROW(phi(ps), PreconditionError);
    EXPECT_EQ(phi_table(ps).at(mask({1, 2, 3})), 30);
}

TEST(Phi, MatchesDirectProductAndSatisfiesConditions) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 1 + trial % 5;
        PowerSequence ps = test::random_power_sequence(m, rng);
        CoefficientSequence cs = phi(ps);
        for (FaceMask f : ordered_subsets(m)) {
            ASSERT_EQ(cs.value(f), product_over_face(ps.table(), f));
        }
    }
}

TEST(Phi, IsMonoidHomomorphism) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 2 + trial % 3;
        PowerSequence a = test::random_power_sequence(m, rng);
        PowerSequence b = test::random_power_sequence(m, rng);
        EXPECT_EQ(phi(monoid_mul(a, b)), monoid_mul(phi(a), phi(b)));
    }
}

TEST(CoefficientSequence, NonRealizableIsValidOverZ) {
    CoefficientTable t = CoefficientTable::ones(3);
    for (FaceMask f : ordered_subsets(3)) {
        if (std::popcount(f) >= 2) {
            t.at(f) = 2;
        }
    }
    EXPECT_TRUE(validate_coefficient_sequence(t, CoefficientRing::integers()).ok());
    auto inverted = validate_coefficient_sequence(t, CoefficientRing::localized({2}));
    ASSERT_FALSE(inverted.ok());
    EXPECT_EQ(inverted.violations[0].kind, CoefficientViolation::Kind::coprimality);
}

TEST(CoefficientSequence, DisjointSplitViolation) {
    CoefficientTable t = CoefficientTable::ones(3);
    t.at(mask({1, 2})) = 2;
    t.at(mask({1, 2, 3})) = 3;
    auto r = validate_coefficient_sequence(t, CoefficientRing::integers());
    ASSERT_FALSE(r.ok());
    ASSERT_EQ(r.violations.size(), 1U);
    EXPECT_EQ(r.violations[0].kind, CoefficientViolation::Kind::divisibility);
    EXPECT_EQ(r.violations[0].sigma, Simplex({1, 2, 3}));
    EXPECT_EQ(r.violations[0].first, Simplex({1, 2}));
    EXPECT_EQ(r.violations[0].second, Simplex({3}));
}

TEST(CoefficientSequence, NormalizationViolation) {
    CoefficientTable t = CoefficientTable::ones(2);
    t.at(mask({2})) = 3;
    auto r = validate_coefficient_sequence(t, CoefficientRing::integers());
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations[0].kind, CoefficientViolation::Kind::normalization);
}

TEST(Normalize, StripsInvertedPrimes) {
    CoefficientTable t = CoefficientTable::ones(2);
    t.at(mask({1, 2})) = 12;
    auto n = normalize(t, CoefficientRing::localized({2}));
    EXPECT_EQ(n.sequence.value(mask({1, 2})), 3);
    EXPECT_EQ(n.units.at(mask({1, 2})), 4);

    t.at(mask({1, 2})) = 8;
    n = normalize(t, CoefficientRing::localized({2}));
    EXPECT_EQ(n.sequence.value(mask({1, 2})), 1);
    EXPECT_EQ(n.units.at(mask({1, 2})), 8);

    t.at(mask({1, 2})) = 12;
    n = normalize(t, CoefficientRing::integers());
    EXPECT_EQ(n.sequence.table(), t);
    EXPECT_EQ(n.units, CoefficientTable::ones(2));

    n = normalize(t, CoefficientRing::rationals());
    EXPECT_EQ(n.sequence.table(), CoefficientTable::ones(2));
    EXPECT_EQ(n.units, t);
}

TEST(Normalize, IsIdempotent) {
    std::mt19937_64 rng(9);
    auto ring = CoefficientRing::localized({2, 5});
    for (int trial = 0; trial < 30; ++trial) {
        int m = 2 + trial % 3;
        CoefficientTable t = phi(test::random_power_sequence(m, rng)).table();
        auto once = normalize(t, ring);
        auto twice = normalize(once.sequence.table(), ring);
        EXPECT_EQ(twice.sequence, once.sequence);
        EXPECT_EQ(twice.units, CoefficientTable::ones(m));
        for (FaceMask f : ordered_subsets(m)) {
            EXPECT_EQ(once.sequence.value(f) * once.units.at(f), t.at(f));
            EXPECT_EQ(gcd(once.sequence.value(f), once.units.at(f)), 1);
        }
    }
}

TEST(Monoid, IdentityAndSquares) {
    PowerSequence a = PowerSequence::from_table(example_variant());
    PowerSequence one = PowerSequence::from_table(PowerTable::ones(3));
    EXPECT_EQ(monoid_mul(a, one), a);

    Simplex tau({1, 2});
    PowerTable c = generator_c(3, tau, 1, 3);
    PowerTable sq = monoid_mul(c, c);
    for (FaceMask f : ordered_subsets(3)) {
        Integer expected = Simplex::from_mask(f).contains(1) && tau.is_subset_of(Simplex::from_mask(f)) ? 9 : 1;
        EXPECT_EQ(sq.at(f, 1), expected);
    }
    EXPECT_THROW(monoid_mul(PowerTable::ones(2), PowerTable::ones(3)), PreconditionError);
}

TEST(Monoid, FrakCTimesFrakD) {
    Simplex tau({2, 3});
    CoefficientTable prod = monoid_mul(generator_frak_c(4, tau, 2), generator_frak_d(4, tau, 2));
    for (FaceMask f : ordered_subsets(4)) {
        Simplex s = Simplex::from_mask(f);
        Integer expected = s == tau ? 4 : (tau.is_subset_of(s) ? 2 : 1);
        EXPECT_EQ(prod.at(f), expected) << s.to_string();
    }
}

TEST(Generators, UpwardGeneratorIsPowerSequenceOnlyWhenVertexInTau) {
    for (FaceMask tau : ordered_subsets(3)) {
        for (int j = 1; j <= 3; ++j) {
            bool in_face = ((tau >> (j - 1)) & 1U) != 0;
            EXPECT_EQ(validate_power_sequence(generator_c(3, Simplex::from_mask(tau), j, 2)).ok(), in_face);
        }
    }
    // The point generator breaks divisibility below the top face.
    EXPECT_FALSE(validate_power_sequence(generator_d(3, Simplex({1, 2}), 1, 2)).ok());
    EXPECT_TRUE(validate_power_sequence(generator_d(3, Simplex({1, 2, 3}), 1, 2)).ok());
}

TEST(Generators, FrakCIsCoefficientSequenceForLargeTau) {
    EXPECT_TRUE(validate_coefficient_sequence(generator_frak_c(3, Simplex({1, 2}), 2), CoefficientRing::integers()).ok());
    EXPECT_FALSE(validate_coefficient_sequence(generator_frak_c(3, Simplex({1}), 2), CoefficientRing::integers()).ok());
}

TEST(ExponentVector, GeneratorIndicator) {
    Simplex tau({1, 3});
    ExponentVector v = to_exponent_vector(generator_c(4, tau, 3, 5), 5);
    for (FaceMask f : ordered_subsets(4)) {
        for (int i = 1; i <= 4; ++i) {
            std::int64_t expected = (i == 3 && tau.is_subset_of(Simplex::from_mask(f))) ? 1 : 0;
            EXPECT_EQ(v.at(f, i), expected);
        }
    }
    EXPECT_TRUE(to_exponent_vector(PowerTable::ones(3), 2).is_zero());
}

TEST(ExponentVector, LogLaw) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 2 + trial % 3;
        PowerSequence a = test::random_power_sequence(m, rng, 16);
        PowerSequence b = test::random_power_sequence(m, rng, 8);
        EXPECT_EQ(to_exponent_vector(monoid_mul(a, b), 2), to_exponent_vector(a, 2) + to_exponent_vector(b, 2));
        EXPECT_EQ(to_exponent_vector(monoid_mul(phi(a), phi(b)), 2),
                  to_exponent_vector(phi(a), 2) + to_exponent_vector(phi(b), 2));
        EXPECT_EQ(phi_exponents(to_exponent_vector(a, 2)), to_exponent_vector(phi(a), 2));
    }
}

TEST(ExponentVector, RejectsNonPowers) {
    PowerTable t = PowerTable::ones(2);
    t.at(mask({1}), 1) = 6;
    EXPECT_THROW(to_exponent_vector(t, 2), PreconditionError);
}

TEST(Mobius, SmallCases) {
    auto r = check_mobius_decomposition(3, Simplex({1}), 1, 2);
    EXPECT_TRUE(r.pass());
    auto top = check_mobius_decomposition(3, Simplex({1, 2, 3}), 2, 3);
    EXPECT_TRUE(top.pass());
    EXPECT_EQ(top.power_target, to_exponent_vector(generator_c(3, Simplex({1, 2, 3}), 2, 3), 3));
}

TEST(Mobius, IndependentInclusionExclusion) {
    // Oracle: sum over all faces sigma with the sign written out explicitly.
    int m = 4;
    Integer p = 2;
    for (FaceMask tau : ordered_subsets(m)) {
        for (int j = 1; j <= m; ++j) {
            ExponentVector sum(ExponentVector::Side::power, m, p);
            for (FaceMask sigma = 0; sigma < (FaceMask{1} << m); ++sigma) {
                if ((sigma & tau) != tau) {
                    continue;
                }
                int extra = std::popcount(sigma) - std::popcount(tau);
                for (FaceMask rho = 0; rho < (FaceMask{1} << m); ++rho) {
                    if ((rho & sigma) == sigma) {
                        sum.at(rho, j) += (extra % 2 == 0) ? 1 : -1;
                    }
                }
            }
            EXPECT_EQ(sum, to_exponent_vector(generator_d(m, Simplex::from_mask(tau), j, p), p));
        }
    }
}
