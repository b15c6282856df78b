#ifndef WPP_RING_HPP
#define WPP_RING_HPP

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "wpp/error.hpp"
#include "wpp/integer.hpp"

namespace wpp {

/// A subring of Q, given as Z with a finite set of primes inverted, or Q itself.
class CoefficientRing {
public:
    static CoefficientRing integers() { return CoefficientRing(); }

    static CoefficientRing rationals() {
        CoefficientRing r;
        r.all_ = true;
        return r;
    }

    static CoefficientRing localized(std::vector<Integer> primes) {
        for (const auto& p : primes) {
            if (!is_prime(p)) {
                throw PreconditionError("inverted value " + p.str() + " is not prime");
            }
        }
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        CoefficientRing r;
        r.primes_ = std::move(primes);
        return r;
    }

    /// "Z", "Q", or "Z[1/2,1/3]".
    static CoefficientRing parse(std::string_view text) {
        if (text == "Z") {
            return integers();
        }
        if (text == "Q") {
            return rationals();
        }
        if (text.size() < 4 || text.substr(0, 2) != "Z[" || text.back() != ']') {
            throw ParseError("ring must be Z, Q or Z[1/p,...], got '" + std::string(text) + "'");
        }
        std::string_view body = text.substr(2, text.size() - 3);
        std::vector<Integer> primes;
        while (!body.empty()) {
            auto comma = body.find(',');
            std::string_view item = body.substr(0, comma);
            if (item.size() < 3 || item.substr(0, 2) != "1/") {
                throw ParseError("ring entry must look like 1/p, got '" + std::string(item) + "'");
            }
            primes.push_back(parse_integer(item.substr(2)));
            if (comma == std::string_view::npos) {
                break;
            }
            body.remove_prefix(comma + 1);
            if (body.empty()) {
                throw ParseError("trailing comma in ring '" + std::string(text) + "'");
            }
        }
        if (primes.empty()) {
            throw ParseError("empty prime list in ring '" + std::string(text) + "'");
        }
        try {
            return localized(std::move(primes));
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }

    bool inverts_all() const { return all_; }
    const std::vector<Integer>& inverted_primes() const { return primes_; }

    bool is_inverted(const Integer& p) const {
        return all_ || std::binary_search(primes_.begin(), primes_.end(), p);
    }

    /// n is a unit iff it is nonzero and every prime factor is inverted.
    bool is_unit(const Integer& n) const {
        if (n == 0) {
            return false;
        }
        if (all_) {
            return true;
        }
        Integer rest = abs(n);
        for (const auto& p : primes_) {
            while (rest % p == 0) {
                rest /= p;
            }
        }
        return rest == 1;
    }

    /// Inverted primes dividing n (for Q: every prime factor of n).
    std::vector<Integer> inverted_factors(const Integer& n) const {
        std::vector<Integer> out;
        if (all_) {
            if (n != 0) {
                for (const auto& pp : factorize(abs(n))) {
                    out.push_back(pp.prime);
                }
            }
            return out;
        }
        for (const auto& p : primes_) {
            if (n % p == 0) {
                out.push_back(p);
            }
        }
        return out;
    }

    bool contains(const Rational& r) const { return is_unit(denominator_of(r)); }

    std::string to_string() const {
        if (all_) {
            return "Q";
        }
        if (primes_.empty()) {
            return "Z";
        }
        std::string out = "Z[";
        for (std::size_t k = 0; k < primes_.size(); ++k) {
            out += (k ? ",1/" : "1/") + primes_[k].str();
        }
        return out + "]";
    }

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

private:
    CoefficientRing() = default;

    bool all_ = false;
    std::vector<Integer> primes_;
};

}  // namespace wpp

#endif  // WPP_RING_HPP
