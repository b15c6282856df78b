// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Every random draw uses a fixed seed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "wpp/wpp.hpp"

using namespace wpp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

// Folds a list of lemma checks into one outcome, keeping the first failure.
Outcome fold(const std::vector<LemmaCheck>& checks) {
    Outcome o;
    for (const auto& c : checks) {
        if (!c.pass && o.pass) {
            o.pass = false;
            o.detail = c.name + ": " + c.detail;
        }
    }
    if (o.pass) {
        o.detail = checks.size() == 1 ? checks.front().detail : std::to_string(checks.size()) + " instances";
    }
    return o;
}

Outcome non_surjectivity() {
    auto start = Clock::now();
    std::vector<LemmaCheck> checks;
    for (int m = 3; m <= 4; ++m) {
        for (int p : {2, 3}) {
            checks.push_back(check_non_surjectivity(m, Integer(p)));
        }
    }
    Outcome o = fold(checks);
    double t = seconds_since(start);
    if (t >= 1.0) {
        o.pass = false;
    }
    o.detail += ", " + seconds(t) + " (limit 1s)";
    return o;
}

Outcome non_injectivity() {
    std::vector<LemmaCheck> checks;
    for (int m = 3; m <= 5; ++m) {
        for (int p : {2, 3, 5}) {
            checks.push_back(check_non_injectivity(m, Integer(p)));
        }
    }
    return fold(checks);
}

// The identity is checked on pairs with j in tau, where c(tau,j) is a power
// sequence; for j outside tau the table is not one, and the run asserts the
// image frak_c(tau + j) instead.
Outcome generator_images() {
    auto start = Clock::now();
    Outcome o;
    std::uint64_t in_face = 0;
    std::uint64_t off_face = 0;
    for (int m = 1; m <= 5; ++m) {
        for (int p : {2, 3}) {
            GeneratorImageTally t = check_generator_images(m, Integer(p));
            in_face += t.in_face;
            off_face += t.off_face;
            if (!t.failures.empty() && o.pass) {
                o.pass = false;
                o.detail = t.failures.front() + ", ";
            }
        }
    }
    double t = seconds_since(start);
    if (t >= 5.0) {
        o.pass = false;
    }
    o.detail += std::to_string(in_face) + " pairs with j in tau, " + std::to_string(off_face) +
                " off-face pairs rejected as power sequences, " + seconds(t) + " (limit 5s)";
    return o;
}

Outcome mobius() {
    std::vector<LemmaCheck> checks;
    for (int m = 1; m <= 5; ++m) {
        for (int p : {2, 3}) {
            checks.push_back(check_mobius_all(m, Integer(p)));
        }
    }
    return fold(checks);
}

Outcome rank_two() { return fold({check_rank_two_realizability(100)}); }

bool same_tables(const StructureTable& a, const StructureTable& b, std::string& detail) {
    auto r = structure_constants_match(a, b, correspondence_by_key(a, b));
    if (!r.match) {
        detail = r.detail;
    }
    return r.match;
}

Outcome phi_compatibility() {
    std::mt19937_64 rng(2024);
    Outcome o;
    const int trials = 240;
    for (int trial = 0; trial < trials && o.pass; ++trial) {
        int m = 1 + trial % 4;
        PowerSequence c = test::random_power_sequence(m, rng, 60, true);
        std::vector<int> d;
        for (int i = 0; i < m; ++i) {
            d.push_back(1 + static_cast<int>(rng() % 6));
        }
        WeightedAlgebra a(GeneratorSpec::spheres(d), c, SimplicialComplex::full_simplex(m), CoefficientRing::integers());
        SphereAlgebra s = sphere_algebra(phi(c), d, CoefficientRing::integers());
        std::string why;
        if (!same_tables(structure_table(s), structure_table(a), why)) {
            o.pass = false;
            o.detail = "trial " + std::to_string(trial) + ": " + why;
        }
    }
    if (o.pass) {
        o.detail = std::to_string(trials) + " random power sequences, entries dividing 60, m <= 4";
    }
    return o;
}

// All downward-closed families of subsets of [m] containing the empty face.
std::vector<SimplicialComplex> all_complexes(int m) {
    const std::size_t n = std::size_t{1} << m;
    std::vector<SimplicialComplex> out;
    for (std::uint64_t family = 0; family < (std::uint64_t{1} << n); ++family) {
        if ((family & 1U) == 0) {
            continue;
        }
        bool closed = true;
        for (std::size_t f = 0; f < n && closed; ++f) {
            if (((family >> f) & 1U) == 0) {
                continue;
            }
            for (int v = 0; v < m; ++v) {
                std::size_t g = f & ~(std::size_t{1} << v);
                if (((family >> g) & 1U) == 0) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) {
            continue;
        }
        std::vector<FaceMask> faces;
        for (std::size_t f = 0; f < n; ++f) {
            if ((family >> f) & 1U) {
                faces.push_back(static_cast<FaceMask>(f));
            }
        }
        out.push_back(SimplicialComplex::from_generating_masks(m, faces));
    }
    return out;
}

Outcome trivial_weights() {
    Outcome o;
    std::size_t count = 0;
    for (int m = 1; m <= 4 && o.pass; ++m) {
        GeneratorSpec g;
        for (int i = 1; i <= m; ++i) {
            g.degrees.push_back({i % 2 == 1 ? 1 : 2});
        }
        PowerSequence ones = PowerSequence::from_table(PowerTable::ones(m));
        for (const auto& k : all_complexes(m)) {
            ++count;
            WeightedAlgebra a(g, ones, k, CoefficientRing::integers());
            std::string why;
            if (!same_tables(structure_table(a), oracle::ordinary_star_algebra(g, k), why)) {
                o.pass = false;
                o.detail = "complex " + io::to_json(k).dump() + ": " + why;
                break;
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(count) + " complexes on m <= 4";
    }
    return o;
}

Outcome property_suite() {
    std::mt19937_64 rng(77);
    Outcome o;
    std::size_t reports = 0;
    auto record = [&](const oracle::OracleReport& r) {
        ++reports;
        if (!r.pass && o.pass) {
            o.pass = false;
            o.detail = r.instance + " " + r.property + ": " + io::to_text(r);
        }
    };
    for (int trial = 0; trial < 16 && o.pass; ++trial) {
        int m = 1 + trial % 4;
        GeneratorSpec g;
        for (int i = 0; i < m; ++i) {
            g.degrees.push_back({1 + static_cast<int>(rng() % 4)});
        }
        auto k = trial % 2 == 0 ? SimplicialComplex::full_simplex(m) : test::random_complex(m, rng);
        WeightedAlgebra a(g, test::random_power_sequence(m, rng, 60, trial % 3 != 0), k,
                          CoefficientRing::integers());
        if (m <= 3) {
            record(oracle::exhaustive_check(a, oracle::Property::associativity));
        } else {
            record(oracle::check_associativity_sampled(structure_table(a), 4000, 1000 + trial, "m=4 sampled"));
        }
        for (auto p : {oracle::Property::graded_commutativity, oracle::Property::integrality,
                       oracle::Property::restriction_ring_hom, oracle::Property::restriction_inclusion_identity}) {
            record(oracle::exhaustive_check(a, p));
        }
        if (k.contains_mask(detail::universe_mask(m))) {
            record(oracle::exhaustive_check(a, oracle::Property::eta_ring_hom));
            int top = 0;
            for (const auto& b : a.basis()) {
                top = std::max(top, b.degree);
            }
            for (int n = 0; n <= top; ++n) {
                auto mat = eta_star_matrix(a, n);
                if (rank_over_rationals(mat) != mat.size() && o.pass) {
                    o.pass = false;
                    o.detail = "eta* not of full rank in degree " + std::to_string(n);
                }
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(reports) + " property reports on 16 algebras";
    }
    return o;
}

Outcome poincare() {
    std::mt19937_64 rng(99);
    Outcome o;
    for (int trial = 0; trial < 50 && o.pass; ++trial) {
        int m = 1 + trial % 5;
        GeneratorSpec g;
        int total = 0;
        for (int i = 0; i < m; ++i) {
            int d = 1 + static_cast<int>(rng() % 20);
            g.degrees.push_back({d});
            total += d;
        }
        auto k = test::random_complex(m, rng);
        WeightedAlgebra a(g, test::random_power_sequence(m, rng, 60, false), k, CoefficientRing::integers());
        if (poincare_series(a, total) != oracle::tensor_poincare_series(g, k, total)) {
            o.pass = false;
            o.detail = "trial " + std::to_string(trial) + " on " + io::to_json(k).dump();
        }
    }
    if (o.pass) {
        o.detail = "50 random complexes, m <= 5, degrees <= 20";
    }
    return o;
}

Outcome phi_image() {
    auto start = Clock::now();
    Outcome o = fold({check_phi_image(3, Integer(2), 1)});
    double t = seconds_since(start);
    if (t >= 30.0) {
        o.pass = false;
    }
    o.detail = check_phi_image(3, Integer(2), 1).detail + ", " + seconds(t) + " (limit 30s)";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"non-surjectivity", non_surjectivity},
        {"non-injectivity", non_injectivity},
        {"generator images", generator_images},
        {"mobius decomposition", mobius},
        {"two-vertex realizability", rank_two},
        {"sphere algebra of phi", phi_compatibility},
        {"trivial weights match star algebra", trivial_weights},
        {"algebra properties", property_suite},
        {"poincare series", poincare},
        {"phi image", phi_image},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
