#pragma once

// Exact arithmetic in the coefficient ring Z[A^{+-1}].

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "h2skein/version.hpp"

namespace h2skein {

using BigInt = boost::multiprecision::cpp_int;

class EngineFault : public std::runtime_error {
  public:
    explicit EngineFault(const std::string& what) : std::runtime_error(what) {}
};

// Sparse Laurent polynomial: exponent of A -> nonzero integer coefficient.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly{}; }
    static LaurentPoly one() { return monomial(0, 1); }

    static LaurentPoly monomial(int exp, BigInt coeff) {
        LaurentPoly p;
        if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
        return p;
    }

    // A^k
    static LaurentPoly power_of_A(int k) { return monomial(k, 1); }

    const std::map<int, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Units of Z[A^{+-1}] are exactly +-A^k.
    bool is_unit() const {
        if (terms_.size() != 1) return false;
        const BigInt& c = terms_.begin()->second;
        return c == 1 || c == -1;
    }

    LaurentPoly unit_inverse() const {
        if (!is_unit()) throw EngineFault("unit_inverse: not a unit");
        return monomial(-terms_.begin()->first, terms_.begin()->second);
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ < b.terms_;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    // Exact division; throws unless the remainder is zero. An exact quotient
    // has its lowest exponent at ord(f) - ord(d), which bounds the descent.
    LaurentPoly exact_div(const LaurentPoly& d) const {
        if (d.is_zero()) throw EngineFault("exact_div: division by zero");
        if (is_zero()) return zero();
        const int shift = terms_.begin()->first - d.terms_.begin()->first;
        LaurentPoly rem = *this;
        LaurentPoly quot;
        const auto lead = *d.terms_.rbegin();  // highest exponent of the divisor
        while (!rem.is_zero()) {
            const auto lr = *rem.terms_.rbegin();
            const int k = lr.first - lead.first;
            if (k < shift) throw EngineFault("exact_div: inexact");
            if (lr.second % lead.second != 0)
                throw EngineFault("exact_div: inexact (leading coefficient)");
            LaurentPoly t = monomial(k, lr.second / lead.second);
            quot += t;
            rem -= t * d;
        }
        return quot;
    }

    // Substitute A = 1 (used only by tests as a cheap cross-check).
    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [k, c] : terms_) s += c;
        return s;
    }

    // Canonical text form: terms sorted by descending exponent, e.g. "-A^4 - A^-4".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const int k = it->first;
            BigInt c = it->second;
            const bool neg = c < 0;
            if (neg) c = -c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            if (c != 1 || k == 0) out += c.str();
            if (k != 0) {
                if (c != 1) out += "*";
                out += "A";
                if (k != 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

  private:
    void add_term(int k, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<int, BigInt> terms_;
};

// delta = -A^2 - A^-2: the scalar a disjoint trivial loop contributes.
// (The printed form of the disjoint-union relation in the source material has
// exponent -1; see version.hpp for the build-time switch.)
inline const LaurentPoly& loop_value() {
    static const LaurentPoly d =
        LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(kDeltaLowExponent, -1);
    return d;
}

inline LaurentPoly loop_value_pow(int m) {
    LaurentPoly r = LaurentPoly::one();
    for (int i = 0; i < m; ++i) r *= loop_value();
    return r;
}

// -A^{3s}: the factor a kink of sign s contributes (Markov stabilization).
inline LaurentPoly framing_factor(int sign) {
    return LaurentPoly::monomial(3 * sign, -1);
}

}  // namespace h2skein
