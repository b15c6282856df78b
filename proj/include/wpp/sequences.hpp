#ifndef WPP_SEQUENCES_HPP
#define WPP_SEQUENCES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpp/complex.hpp"
#include "wpp/error.hpp"
#include "wpp/integer.hpp"
#include "wpp/ring.hpp"

namespace wpp {

/// Raw assignment sigma -> (c_1^sigma, ..., c_m^sigma) over all faces of the
/// full simplex, indexed by face mask. No invariants beyond shape.
struct PowerTable {
    int m = 0;
    std::vector<std::vector<Integer>> rows;

    static PowerTable ones(int m) {
        detail::check_universe(m, "PowerTable");
        return PowerTable{m, std::vector<std::vector<Integer>>(std::size_t{1} << m, std::vector<Integer>(m, 1))};
    }

    const Integer& at(FaceMask face, int vertex) const { return rows[face][static_cast<std::size_t>(vertex - 1)]; }
    Integer& at(FaceMask face, int vertex) { return rows[face][static_cast<std::size_t>(vertex - 1)]; }

    friend bool operator==(const PowerTable&, const PowerTable&) = default;
};

/// Raw assignment sigma -> value over all faces of the full simplex.
struct CoefficientTable {
    int m = 0;
    std::vector<Integer> values;

    static CoefficientTable ones(int m) {
        detail::check_universe(m, "CoefficientTable");
        return CoefficientTable{m, std::vector<Integer>(std::size_t{1} << m, 1)};
    }

    const Integer& at(FaceMask face) const { return values[face]; }
    Integer& at(FaceMask face) { return values[face]; }

    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

namespace detail {

inline void check_shape(const PowerTable& t) {
    check_universe(t.m, "power table");
    if (t.rows.size() != (std::size_t{1} << t.m)) {
        throw ParseError("power table must cover all " + std::to_string(std::size_t{1} << t.m) + " faces");
    }
    for (std::size_t f = 0; f < t.rows.size(); ++f) {
        if (t.rows[f].size() != static_cast<std::size_t>(t.m)) {
            throw ParseError("power table entry for " + Simplex::from_mask(static_cast<FaceMask>(f)).to_string() +
                             " must have " + std::to_string(t.m) + " components");
        }
        for (const auto& v : t.rows[f]) {
            if (v < 1) {
                throw PreconditionError("non-positive power table entry at " +
                                        Simplex::from_mask(static_cast<FaceMask>(f)).to_string());
            }
        }
    }
}

inline void check_shape(const CoefficientTable& t) {
    check_universe(t.m, "coefficient table");
    if (t.values.size() != (std::size_t{1} << t.m)) {
        throw ParseError("coefficient table must cover all " + std::to_string(std::size_t{1} << t.m) + " faces");
    }
    for (std::size_t f = 0; f < t.values.size(); ++f) {
        if (t.values[f] < 1) {
            throw PreconditionError("non-positive coefficient at " +
                                    Simplex::from_mask(static_cast<FaceMask>(f)).to_string());
        }
    }
}

inline void check_prime(const Integer& p) {
    if (!is_prime(p)) {
        throw PreconditionError(p.str() + " is not prime");
    }
}

inline void check_face(int m, const Simplex& s, const char* who) {
    if (s.max_vertex() > m) {
        throw PreconditionError(std::string(who) + ": face " + s.to_string() + " outside [" + std::to_string(m) + "]");
    }
}

}  // namespace detail

template <class T, class V>
struct Validated {
    std::optional<T> value;
    std::vector<V> violations;

    bool ok() const { return value.has_value(); }
};

struct PowerViolation {
    enum class Kind { off_face, divisibility };

    Kind kind;
    Simplex tau;    // smaller face (divisibility only)
    Simplex sigma;  // offending face
    int vertex;
    Integer lower;  // c_i^tau (divisibility only)
    Integer value;  // c_i^sigma

    std::string describe() const {
        std::string i = std::to_string(vertex);
        if (kind == Kind::off_face) {
            return "off-face: c_" + i + "^" + sigma.to_string() + " = " + value.str() + " but vertex " + i +
                   " is not in " + sigma.to_string();
        }
        return "divisibility: c_" + i + "^" + tau.to_string() + " = " + lower.str() + " does not divide c_" + i +
               "^" + sigma.to_string() + " = " + value.str();
    }
};

/// Power table satisfying: c_i^sigma = 1 for i outside sigma, and
/// c_i^tau | c_i^sigma whenever tau is a subface of sigma.
class PowerSequence {
public:
    int m() const { return table_.m; }
    const PowerTable& table() const { return table_; }
    const Integer& entry(const Simplex& sigma, int vertex) const { return table_.at(sigma.mask(), vertex); }
    const Integer& entry(FaceMask sigma, int vertex) const { return table_.at(sigma, vertex); }

    /// Membership in the domain of phi: c_i^{i} = 1 for every vertex.
    bool normalized_on_vertices() const { return first_unnormalized_vertex() == 0; }

    int first_unnormalized_vertex() const {
        for (int i = 1; i <= table_.m; ++i) {
            if (table_.at(FaceMask{1} << (i - 1), i) != 1) {
                return i;
            }
        }
        return 0;
    }

    /// Throws PreconditionError listing the first violation.
    static PowerSequence from_table(PowerTable table);

    friend bool operator==(const PowerSequence&, const PowerSequence&) = default;

private:
    friend Validated<PowerSequence, PowerViolation> validate_power_sequence(PowerTable table);
    explicit PowerSequence(PowerTable t) : table_(std::move(t)) {}

    PowerTable table_;
};

/// Checks both power-sequence invariants. Divisibility is checked on
/// covering pairs tau = sigma \ {k}, which implies it for all tau <= sigma.
inline Validated<PowerSequence, PowerViolation> validate_power_sequence(PowerTable table) {
    detail::check_shape(table);
    std::vector<PowerViolation> violations;
    for (FaceMask sigma : ordered_subsets(table.m)) {
        for (int i = 1; i <= table.m; ++i) {
            FaceMask bit = FaceMask{1} << (i - 1);
            if ((sigma & bit) == 0 && table.at(sigma, i) != 1) {
                violations.push_back({PowerViolation::Kind::off_face, Simplex(), Simplex::from_mask(sigma), i, 1,
                                      table.at(sigma, i)});
            }
        }
        for (FaceMask rest = sigma; rest != 0; rest &= rest - 1) {
            FaceMask tau = sigma & ~(rest & (~rest + 1));
            for (FaceMask r2 = tau; r2 != 0; r2 &= r2 - 1) {
                int i = std::countr_zero(r2) + 1;
                if (!divides(table.at(tau, i), table.at(sigma, i))) {
                    violations.push_back({PowerViolation::Kind::divisibility, Simplex::from_mask(tau),
                                          Simplex::from_mask(sigma), i, table.at(tau, i), table.at(sigma, i)});
                }
            }
        }
    }
    if (!violations.empty()) {
        return {std::nullopt, std::move(violations)};
    }
    return {PowerSequence(std::move(table)), {}};
}

inline PowerSequence PowerSequence::from_table(PowerTable table) {
    auto result = validate_power_sequence(std::move(table));
    if (!result.ok()) {
        throw PreconditionError("not a power sequence: " + result.violations.front().describe());
    }
    return std::move(*result.value);
}

/// c_i^sigma = base_i for i in sigma, 1 otherwise.
inline PowerSequence minimal_power_sequence(int m, const std::vector<Integer>& base) {
    detail::check_universe(m, "minimal_power_sequence");
    if (base.size() != static_cast<std::size_t>(m)) {
        throw PreconditionError("minimal_power_sequence: need " + std::to_string(m) + " base values");
    }
    PowerTable t = PowerTable::ones(m);
    for (std::size_t f = 0; f < t.rows.size(); ++f) {
        for (int i = 1; i <= m; ++i) {
            if (base[static_cast<std::size_t>(i - 1)] < 1) {
                throw PreconditionError("minimal_power_sequence: base entries must be positive");
            }
            if ((f >> (i - 1)) & 1U) {
                t.at(static_cast<FaceMask>(f), i) = base[static_cast<std::size_t>(i - 1)];
            }
        }
    }
    return PowerSequence::from_table(std::move(t));
}

/// Componentwise c^sigma / c^tau for tau <= sigma.
inline std::vector<Integer> ratio(const PowerSequence& ps, const Simplex& tau, const Simplex& sigma) {
    detail::check_face(ps.m(), sigma, "ratio");
    if (!tau.is_subset_of(sigma)) {
        throw PreconditionError("ratio: " + tau.to_string() + " is not a face of " + sigma.to_string());
    }
    std::vector<Integer> out(static_cast<std::size_t>(ps.m()));
    for (int i = 1; i <= ps.m(); ++i) {
        out[static_cast<std::size_t>(i - 1)] = ps.entry(sigma, i) / ps.entry(tau, i);
    }
    return out;
}

struct CoefficientViolation {
    enum class Kind { normalization, divisibility, coprimality };

    Kind kind;
    Simplex sigma;
    Simplex first;   // disjoint parts (divisibility only)
    Simplex second;
    Integer value;   // coefficient at sigma
    Integer product; // coefficient product of the parts (divisibility only)
    Integer prime;   // inverted prime (coprimality only)

    std::string describe() const {
        switch (kind) {
            case Kind::normalization:
                return "normalization: value at " + sigma.to_string() + " is " + value.str() + ", expected 1";
            case Kind::divisibility:
                return "divisibility: c" + first.to_string() + " * c" + second.to_string() + " = " + product.str() +
                       " does not divide c" + sigma.to_string() + " = " + value.str();
            case Kind::coprimality:
                return "coprimality: value " + value.str() + " at " + sigma.to_string() +
                       " is divisible by inverted prime " + prime.str();
        }
        return {};
    }
};

/// Coefficient table satisfying normalization, disjoint-union divisibility
/// and coprimality to the units of its ring.
class CoefficientSequence {
public:
    int m() const { return table_.m; }
    const CoefficientTable& table() const { return table_; }
    const CoefficientRing& ring() const { return ring_; }
    const Integer& value(const Simplex& sigma) const { return table_.at(sigma.mask()); }
    const Integer& value(FaceMask sigma) const { return table_.at(sigma); }

    static CoefficientSequence from_table(CoefficientTable table, const CoefficientRing& ring);

    friend bool operator==(const CoefficientSequence& a, const CoefficientSequence& b) {
        return a.table_ == b.table_;
    }

private:
    friend Validated<CoefficientSequence, CoefficientViolation> validate_coefficient_sequence(
        CoefficientTable table, const CoefficientRing& ring);
    CoefficientSequence(CoefficientTable t, CoefficientRing r) : table_(std::move(t)), ring_(std::move(r)) {}

    CoefficientTable table_;
    CoefficientRing ring_ = CoefficientRing::integers();
};

namespace detail {

// Conditions 1 and 2; every unordered split into two nonempty parts is visited once.
inline void collect_structural_violations(const CoefficientTable& t, std::vector<CoefficientViolation>& out) {
    for (FaceMask sigma : ordered_subsets(t.m)) {
        if (std::popcount(sigma) <= 1) {
            if (t.at(sigma) != 1) {
                out.push_back({CoefficientViolation::Kind::normalization, Simplex::from_mask(sigma), {}, {},
                               t.at(sigma), 0, 0});
            }
            continue;
        }
        FaceMask lowest = sigma & (~sigma + 1);
        for (FaceMask part = (sigma - 1) & sigma; part != 0; part = (part - 1) & sigma) {
            if ((part & lowest) == 0) {
                continue;
            }
            FaceMask other = sigma & ~part;
            Integer prod = t.at(part) * t.at(other);
            if (!divides(prod, t.at(sigma))) {
                out.push_back({CoefficientViolation::Kind::divisibility, Simplex::from_mask(sigma),
                               Simplex::from_mask(part), Simplex::from_mask(other), t.at(sigma), prod, 0});
            }
        }
    }
}

}  // namespace detail

inline Validated<CoefficientSequence, CoefficientViolation> validate_coefficient_sequence(
    CoefficientTable table, const CoefficientRing& ring) {
    detail::check_shape(table);
    std::vector<CoefficientViolation> violations;
    detail::collect_structural_violations(table, violations);
    for (FaceMask sigma : ordered_subsets(table.m)) {
        for (const auto& p : ring.inverted_factors(table.at(sigma))) {
            violations.push_back({CoefficientViolation::Kind::coprimality, Simplex::from_mask(sigma), {}, {},
                                  table.at(sigma), 0, p});
        }
    }
    if (!violations.empty()) {
        return {std::nullopt, std::move(violations)};
    }
    return {CoefficientSequence(std::move(table), ring), {}};
}

inline CoefficientSequence CoefficientSequence::from_table(CoefficientTable table, const CoefficientRing& ring) {
    auto result = validate_coefficient_sequence(std::move(table), ring);
    if (!result.ok()) {
        throw PreconditionError("not a coefficient sequence: " + result.violations.front().describe());
    }
    return std::move(*result.value);
}

/// sigma -> prod_{i in sigma} c_i^sigma, with no requirement on c_i^{i}.
inline CoefficientTable phi_table(const PowerSequence& ps) {
    CoefficientTable out = CoefficientTable::ones(ps.m());
    for (std::size_t f = 0; f < out.values.size(); ++f) {
        Integer prod = 1;
        for (FaceMask rest = static_cast<FaceMask>(f); rest != 0; rest &= rest - 1) {
            prod *= ps.entry(static_cast<FaceMask>(f), std::countr_zero(rest) + 1);
        }
        out.values[f] = std::move(prod);
    }
    return out;
}

/// The map from power sequences with c_i^{i} = 1 to coefficient sequences (over Z).
inline CoefficientSequence phi(const PowerSequence& ps) {
    if (int i = ps.first_unnormalized_vertex(); i != 0) {
        throw PreconditionError("phi: c_" + std::to_string(i) + "^[" + std::to_string(i) +
                                "] = " + ps.entry(FaceMask{1} << (i - 1), i).str() + ", expected 1");
    }
    return CoefficientSequence::from_table(phi_table(ps), CoefficientRing::integers());
}

struct Normalization {
    CoefficientSequence sequence;  // v-table
    CoefficientTable units;        // u-table, value = u * v
};

/// Splits each value as u * v with u a unit of the ring and gcd(u, v) = 1.
/// Over Q every v is 1.
inline Normalization normalize(const CoefficientTable& table, const CoefficientRing& ring) {
    detail::check_shape(table);
    std::vector<CoefficientViolation> structural;
    detail::collect_structural_violations(table, structural);
    if (!structural.empty()) {
        throw PreconditionError("normalize: " + structural.front().describe());
    }
    CoefficientTable v = table;
    CoefficientTable u = CoefficientTable::ones(table.m);
    for (std::size_t f = 0; f < v.values.size(); ++f) {
        if (ring.inverts_all()) {
            u.values[f] = v.values[f];
            v.values[f] = 1;
            continue;
        }
        for (const auto& p : ring.inverted_primes()) {
            while (v.values[f] % p == 0) {
                v.values[f] /= p;
                u.values[f] *= p;
            }
        }
    }
    return {CoefficientSequence::from_table(std::move(v), ring), std::move(u)};
}

inline PowerTable monoid_mul(const PowerTable& a, const PowerTable& b) {
    if (a.m != b.m) {
        throw PreconditionError("monoid_mul: mismatched m (" + std::to_string(a.m) + " vs " + std::to_string(b.m) + ")");
    }
    PowerTable out = a;
    for (std::size_t f = 0; f < out.rows.size(); ++f) {
        for (std::size_t i = 0; i < out.rows[f].size(); ++i) {
            out.rows[f][i] *= b.rows[f][i];
        }
    }
    return out;
}

inline CoefficientTable monoid_mul(const CoefficientTable& a, const CoefficientTable& b) {
    if (a.m != b.m) {
        throw PreconditionError("monoid_mul: mismatched m (" + std::to_string(a.m) + " vs " + std::to_string(b.m) + ")");
    }
    CoefficientTable out = a;
    for (std::size_t f = 0; f < out.values.size(); ++f) {
        out.values[f] *= b.values[f];
    }
    return out;
}

inline PowerSequence monoid_mul(const PowerSequence& a, const PowerSequence& b) {
    return PowerSequence::from_table(monoid_mul(a.table(), b.table()));
}

inline CoefficientSequence monoid_mul(const CoefficientSequence& a, const CoefficientSequence& b) {
    if (!(a.ring() == b.ring())) {
        throw PreconditionError("monoid_mul: coefficient sequences over different rings");
    }
    return CoefficientSequence::from_table(monoid_mul(a.table(), b.table()), a.ring());
}

// Generators of the group completions. These are the literal tables; whether
// they are power/coefficient sequences depends on tau and j (see
// validate_power_sequence and validate_coefficient_sequence).

/// p at (sigma, j) for tau <= sigma, 1 elsewhere.
inline PowerTable generator_c(int m, const Simplex& tau, int j, const Integer& p) {
    detail::check_universe(m, "generator_c");
    detail::check_face(m, tau, "generator_c");
    detail::check_prime(p);
    if (j < 1 || j > m) {
        throw PreconditionError("generator_c: vertex " + std::to_string(j) + " out of range");
    }
    PowerTable t = PowerTable::ones(m);
    for (std::size_t f = 0; f < t.rows.size(); ++f) {
        if (tau.is_subset_of(Simplex::from_mask(static_cast<FaceMask>(f)))) {
            t.at(static_cast<FaceMask>(f), j) = p;
        }
    }
    return t;
}

/// p at (tau, j), 1 elsewhere.
inline PowerTable generator_d(int m, const Simplex& tau, int j, const Integer& p) {
    detail::check_universe(m, "generator_d");
    detail::check_face(m, tau, "generator_d");
    detail::check_prime(p);
    if (j < 1 || j > m) {
        throw PreconditionError("generator_d: vertex " + std::to_string(j) + " out of range");
    }
    PowerTable t = PowerTable::ones(m);
    t.at(tau.mask(), j) = p;
    return t;
}

/// p on every sigma containing tau, 1 elsewhere.
inline CoefficientTable generator_frak_c(int m, const Simplex& tau, const Integer& p) {
    detail::check_universe(m, "generator_frak_c");
    detail::check_face(m, tau, "generator_frak_c");
    detail::check_prime(p);
    CoefficientTable t = CoefficientTable::ones(m);
    for (std::size_t f = 0; f < t.values.size(); ++f) {
        if (tau.is_subset_of(Simplex::from_mask(static_cast<FaceMask>(f)))) {
            t.values[f] = p;
        }
    }
    return t;
}

/// p at tau only.
inline CoefficientTable generator_frak_d(int m, const Simplex& tau, const Integer& p) {
    detail::check_universe(m, "generator_frak_d");
    detail::check_face(m, tau, "generator_frak_d");
    detail::check_prime(p);
    CoefficientTable t = CoefficientTable::ones(m);
    t.values[tau.mask()] = p;
    return t;
}

/// p-adic exponents of a table whose entries are all powers of p; the
/// group-completion coordinates. Power side is indexed by (face, vertex),
/// coefficient side by face.
class ExponentVector {
public:
    enum class Side { power, coefficient };

    ExponentVector(Side side, int m, Integer p)
        : side_(side), m_(m), p_(std::move(p)),
          entries_((std::size_t{1} << m) * (side == Side::power ? static_cast<std::size_t>(m) : 1U), 0) {}

    Side side() const { return side_; }
    int m() const { return m_; }
    const Integer& prime() const { return p_; }
    const std::vector<std::int64_t>& entries() const { return entries_; }

    std::int64_t at(FaceMask face, int vertex) const { return entries_[index(face, vertex)]; }
    std::int64_t& at(FaceMask face, int vertex) { return entries_[index(face, vertex)]; }
    std::int64_t at(FaceMask face) const { return entries_[index(face, 1)]; }
    std::int64_t& at(FaceMask face) { return entries_[index(face, 1)]; }

    bool is_zero() const {
        for (auto e : entries_) {
            if (e != 0) {
                return false;
            }
        }
        return true;
    }

    ExponentVector& operator+=(const ExponentVector& o) {
        check_compatible(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            entries_[k] += o.entries_[k];
        }
        return *this;
    }

    ExponentVector& operator-=(const ExponentVector& o) {
        check_compatible(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            entries_[k] -= o.entries_[k];
        }
        return *this;
    }

    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
    friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

    friend ExponentVector operator*(std::int64_t k, ExponentVector v) {
        for (auto& e : v.entries_) {
            e *= k;
        }
        return v;
    }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

    /// Nonzero coordinates, e.g. "{([1,2],1):1, ([1,2,3],1):-1}".
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (FaceMask f : ordered_subsets(m_)) {
            int count = side_ == Side::power ? m_ : 1;
            for (int i = 1; i <= count; ++i) {
                std::int64_t e = entries_[index(f, i)];
                if (e == 0) {
                    continue;
                }
                out += first ? "" : ", ";
                first = false;
                out += side_ == Side::power ? "(" + Simplex::from_mask(f).to_string() + "," + std::to_string(i) + ")"
                                            : Simplex::from_mask(f).to_string();
                out += ":" + std::to_string(e);
            }
        }
        return out + "}";
    }

private:
    std::size_t index(FaceMask face, int vertex) const {
        return side_ == Side::power ? static_cast<std::size_t>(face) * static_cast<std::size_t>(m_) +
                                          static_cast<std::size_t>(vertex - 1)
                                    : static_cast<std::size_t>(face);
    }

    void check_compatible(const ExponentVector& o) const {
        if (side_ != o.side_ || m_ != o.m_ || p_ != o.p_) {
            throw PreconditionError("exponent vectors live in different lattices");
        }
    }

    Side side_;
    int m_;
    Integer p_;
    std::vector<std::int64_t> entries_;
};

inline ExponentVector to_exponent_vector(const PowerTable& t, const Integer& p) {
    detail::check_shape(t);
    detail::check_prime(p);
    ExponentVector out(ExponentVector::Side::power, t.m, p);
    for (std::size_t f = 0; f < t.rows.size(); ++f) {
        for (int i = 1; i <= t.m; ++i) {
            long e = power_exponent(t.at(static_cast<FaceMask>(f), i), p);
            if (e < 0) {
                throw PreconditionError("entry " + t.at(static_cast<FaceMask>(f), i).str() + " at (" +
                                        Simplex::from_mask(static_cast<FaceMask>(f)).to_string() + "," +
                                        std::to_string(i) + ") is not a power of " + p.str());
            }
            out.at(static_cast<FaceMask>(f), i) = e;
        }
    }
    return out;
}

inline ExponentVector to_exponent_vector(const CoefficientTable& t, const Integer& p) {
    detail::check_shape(t);
    detail::check_prime(p);
    ExponentVector out(ExponentVector::Side::coefficient, t.m, p);
    for (std::size_t f = 0; f < t.values.size(); ++f) {
        long e = power_exponent(t.values[f], p);
        if (e < 0) {
            throw PreconditionError("value " + t.values[f].str() + " at " +
                                    Simplex::from_mask(static_cast<FaceMask>(f)).to_string() + " is not a power of " +
                                    p.str());
        }
        out.at(static_cast<FaceMask>(f)) = e;
    }
    return out;
}

inline ExponentVector to_exponent_vector(const PowerSequence& ps, const Integer& p) {
    return to_exponent_vector(ps.table(), p);
}

inline ExponentVector to_exponent_vector(const CoefficientSequence& cs, const Integer& p) {
    return to_exponent_vector(cs.table(), p);
}

/// Phi extended linearly to the group completion: sigma -> sum_{i in sigma} e(sigma, i).
inline ExponentVector phi_exponents(const ExponentVector& power) {
    if (power.side() != ExponentVector::Side::power) {
        throw PreconditionError("phi_exponents: expects a power-side exponent vector");
    }
    ExponentVector out(ExponentVector::Side::coefficient, power.m(), power.prime());
    for (std::size_t f = 0; f < (std::size_t{1} << power.m()); ++f) {
        std::int64_t sum = 0;
        for (FaceMask rest = static_cast<FaceMask>(f); rest != 0; rest &= rest - 1) {
            sum += power.at(static_cast<FaceMask>(f), std::countr_zero(rest) + 1);
        }
        out.at(static_cast<FaceMask>(f)) = sum;
    }
    return out;
}

/// True iff every nonzero coordinate (sigma, i) has i in sigma, i.e. the
/// vector lies in the lattice spanned by power sequences.
inline bool supported_on_faces(const ExponentVector& power) {
    for (std::size_t f = 0; f < (std::size_t{1} << power.m()); ++f) {
        for (int i = 1; i <= power.m(); ++i) {
            if (((f >> (i - 1)) & 1U) == 0 && power.at(static_cast<FaceMask>(f), i) != 0) {
                return false;
            }
        }
    }
    return true;
}

struct MobiusReport {
    Simplex tau;
    int vertex = 0;
    bool power_pass = false;
    bool coefficient_pass = false;
    ExponentVector power_target;       // d(tau, j)
    ExponentVector power_signed_sum;   // sum over sigma >= tau of (-1)^{|sigma \ tau|} c(sigma, j)
    ExponentVector coefficient_target;
    ExponentVector coefficient_signed_sum;

    bool pass() const { return power_pass && coefficient_pass; }
};

/// Checks, in the exponent lattice, that the point generator at tau is the
/// alternating sum of the upward generators over all sigma containing tau.
inline MobiusReport check_mobius_decomposition(int m, const Simplex& tau, int j, const Integer& p) {
    MobiusReport r{tau,
                   j,
                   false,
                   false,
                   to_exponent_vector(generator_d(m, tau, j, p), p),
                   ExponentVector(ExponentVector::Side::power, m, p),
                   to_exponent_vector(generator_frak_d(m, tau, p), p),
                   ExponentVector(ExponentVector::Side::coefficient, m, p)};
    FaceMask universe = detail::universe_mask(m);
    FaceMask free_part = universe & ~tau.mask();
    for (FaceMask extra = free_part;; extra = (extra - 1) & free_part) {
        Simplex sigma = Simplex::from_mask(tau.mask() | extra);
        std::int64_t sign = (std::popcount(extra) % 2 == 0) ? 1 : -1;
        r.power_signed_sum += sign * to_exponent_vector(generator_c(m, sigma, j, p), p);
        r.coefficient_signed_sum += sign * to_exponent_vector(generator_frak_c(m, sigma, p), p);
        if (extra == 0) {
            break;
        }
    }
    r.power_pass = r.power_signed_sum == r.power_target;
    r.coefficient_pass = r.coefficient_signed_sum == r.coefficient_target;
    return r;
}

}  // namespace wpp

#endif  // WPP_SEQUENCES_HPP
