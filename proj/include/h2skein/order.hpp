#pragma once

// Total ordering on the augmented monomial set L and its extension to
// crossing-free states; the termination measure for all reductions.

#include <compare>
#include <optional>
#include <vector>

#include "h2skein/braid.hpp"
#include "h2skein/statesum.hpp"

namespace h2skein {

enum class Ordering { Less, Equal, Greater };

inline Ordering flip(Ordering o) {
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    return Ordering::Equal;
}

struct MonomialStats {
    int expTotal = 0;
    // highest index per family; empty family has none
    std::optional<int> indT, indTau, indT_;
    // highest - lowest index per nonempty family, 0 otherwise
    int lenT = 0, lenTau = 0, lenBigT = 0;
    int expT = 0, expTau = 0, expBigT = 0;
};

inline MonomialStats stats(const LoopMonomial& m) {
    MonomialStats s;
    auto fam = [](const std::map<int, int>& f, std::optional<int>& ind, int& len, int& exp) {
        if (!f.empty()) {
            ind = f.rbegin()->first;
            len = f.rbegin()->first - f.begin()->first;
        }
        for (const auto& [i, e] : f) exp += e;
    };
    fam(m.t, s.indT, s.lenT, s.expT);
    fam(m.tau, s.indTau, s.lenTau, s.expTau);
    fam(m.bigT, s.indT_, s.lenBigT, s.expBigT);
    s.expTotal = s.expT + s.expTau + s.expBigT;
    return s;
}

namespace detail {

// Absent families compare as index -infinity.
inline Ordering cmp_opt(const std::optional<int>& x, const std::optional<int>& y) {
    int xv = x.value_or(-1), yv = y.value_or(-1);
    if (xv != yv) return xv < yv ? Ordering::Less : Ordering::Greater;
    return Ordering::Equal;
}

// Index sequences position-wise, ascending. At the first difference the
// SMALLER index makes the monomial GREATER. A strict prefix (ties exhausted)
// makes the shorter one Less; unreachable when indices and exponents
// otherwise tie, kept as the documented interpretation.
inline Ordering cmp_indices(const std::map<int, int>& f, const std::map<int, int>& g) {
    auto it = f.begin(), jt = g.begin();
    for (; it != f.end() && jt != g.end(); ++it, ++jt) {
        if (it->first != jt->first)
            return it->first < jt->first ? Ordering::Greater : Ordering::Less;
    }
    if (it == f.end() && jt == g.end()) return Ordering::Equal;
    return it == f.end() ? Ordering::Less : Ordering::Greater;
}

// Exponents scanned from the highest index downward; at the first difference
// the smaller exponent makes the monomial Less.
inline Ordering cmp_exponents(const std::map<int, int>& f, const std::map<int, int>& g) {
    auto it = f.rbegin(), jt = g.rbegin();
    for (; it != f.rend() && jt != g.rend(); ++it, ++jt) {
        if (it->second != jt->second)
            return it->second < jt->second ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;  // equal index sets have equal lengths here
}

}  // namespace detail

// The ordering on L, clause by clause: total exponent; T-, tau-, t-indices;
// index sequences; exponent sequences (T, then tau, then t families).
inline Ordering compare(const LoopMonomial& w, const LoopMonomial& u) {
    MonomialStats sw = stats(w), su = stats(u);
    if (sw.expTotal != su.expTotal)
        return sw.expTotal < su.expTotal ? Ordering::Less : Ordering::Greater;

    if (auto o = detail::cmp_opt(sw.indT_, su.indT_); o != Ordering::Equal) return o;
    if (auto o = detail::cmp_opt(sw.indTau, su.indTau); o != Ordering::Equal) return o;
    if (auto o = detail::cmp_opt(sw.indT, su.indT); o != Ordering::Equal) return o;

    if (auto o = detail::cmp_indices(w.t, u.t); o != Ordering::Equal) return o;
    if (auto o = detail::cmp_indices(w.tau, u.tau); o != Ordering::Equal) return o;
    if (auto o = detail::cmp_indices(w.bigT, u.bigT); o != Ordering::Equal) return o;

    if (auto o = detail::cmp_exponents(w.bigT, u.bigT); o != Ordering::Equal) return o;
    if (auto o = detail::cmp_exponents(w.tau, u.tau); o != Ordering::Equal) return o;
    if (auto o = detail::cmp_exponents(w.t, u.t); o != Ordering::Equal) return o;

    return Ordering::Equal;
}

inline bool monomial_less(const LoopMonomial& a, const LoopMonomial& b) {
    return compare(a, b) == Ordering::Less;
}

struct MonomialLess {
    bool operator()(const LoopMonomial& a, const LoopMonomial& b) const {
        return monomial_less(a, b);
    }
};

// --- extension to curve systems ----------------------------------------------
//
// A family-pure system (every component a winding of a, b or ab) is ranked by
// the L-monomial it re-parts to: per family, windings in descending order get
// ascending fresh strand indices (t-family first, then tau, then T). This
// makes the system order agree with the monomial order on every basis state.
// Non-pure systems fall back to (total weight, component count, class words),
// ranked above pure systems of the same weight; they only ever appear in
// terms the reducer refuses to touch.

inline std::optional<LoopMonomial> system_image_monomial(const CurveSystem& s) {
    std::vector<int> wa, wb, wab;
    for (const auto& c : s.components()) {
        auto [fam, wind] = c.family();
        switch (fam) {
            case CurveFamily::A: wa.push_back(wind); break;
            case CurveFamily::B: wb.push_back(wind); break;
            case CurveFamily::AB: wab.push_back(wind); break;
            case CurveFamily::Other: return std::nullopt;
        }
    }
    auto desc = [](std::vector<int>& v) { std::sort(v.rbegin(), v.rend()); };
    desc(wa);
    desc(wb);
    desc(wab);
    LoopMonomial m;
    int idx = 0;
    for (int e : wa) m.set(LetterKind::LoopT, idx++, e);
    for (int e : wb) m.set(LetterKind::LoopTau, idx++, e);
    for (int e : wab) m.set(LetterKind::LoopBigT, idx++, e);
    return m;
}

inline int system_weight(const CurveSystem& s) {
    int w = 0;
    for (const auto& c : s.components()) {
        auto [fam, wind] = c.family();
        w += (fam == CurveFamily::Other) ? static_cast<int>(c.word().size()) : wind;
    }
    return w;
}

inline Ordering compare_systems(const CurveSystem& s1, const CurveSystem& s2) {
    auto m1 = system_image_monomial(s1), m2 = system_image_monomial(s2);
    if (m1 && m2) return compare(*m1, *m2);

    int w1 = system_weight(s1), w2 = system_weight(s2);
    if (w1 != w2) return w1 < w2 ? Ordering::Less : Ordering::Greater;
    if (m1.has_value() != m2.has_value())
        return m1.has_value() ? Ordering::Less : Ordering::Greater;
    if (s1.size() != s2.size()) return s1.size() < s2.size() ? Ordering::Less : Ordering::Greater;
    if (s1 == s2) return Ordering::Equal;
    return s1 < s2 ? Ordering::Less : Ordering::Greater;
}

inline bool system_less(const CurveSystem& a, const CurveSystem& b) {
    return compare_systems(a, b) == Ordering::Less;
}

}  // namespace h2skein
