#pragma once

// Ordering-guided rewriting of skein elements into the three bases, the
// homologous-word map, and truncated change-of-basis matrices.
//
// Basis realizations as crossing-free states:
//   B       (p,q,r) -> p parallel a-curves, q b-curves, r ab-curves
//   B', calB (i,k,j) -> one i-fold a-winding, one k-fold b-winding,
//                       one j-fold ab-winding (empty blocks absent)
// The monomial with all exponents zero is the unknot (= delta times the
// empty system) in every basis.
//
// The rewrite engine works per family inside its annulus. The only geometric
// input beyond the braid-level state sum is the hook-slide step: winding a
// parallel copy into an existing winding costs one crossing, so
//   s_k = -A^{-3w} ( A^w * x * s_{k-1}  +  A^{-w} * s_{k-2} ),
// where s_k is the k-fold winding, x = s_1, s_0 the trivial loop, and w the
// slide sign convention. Everything else is exact polynomial algebra in the
// resulting family polynomials P_k.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "h2skein/laurent.hpp"
#include "h2skein/order.hpp"
#include "h2skein/statesum.hpp"

namespace h2skein {

class UnsupportedState : public std::runtime_error {
  public:
    explicit UnsupportedState(const std::string& what) : std::runtime_error(what) {}
};

enum class BasisId { B, Bprime, ScriptB };

inline std::string basis_name(BasisId b) {
    switch (b) {
        case BasisId::B: return "B";
        case BasisId::Bprime: return "Bp";
        case BasisId::ScriptB: return "calB";
    }
    return "?";
}

inline bool in_basis(const LoopMonomial& m, BasisId b) {
    switch (b) {
        case BasisId::B: return m.in_B();
        case BasisId::Bprime: return m.in_Bprime();
        case BasisId::ScriptB: return m.in_ScriptB();
    }
    return false;
}

// The basis monomial with exponent triple (i, k, j).
inline LoopMonomial make_basis_monomial(BasisId b, int i, int k, int j) {
    LoopMonomial m;
    switch (b) {
        case BasisId::B: {
            int idx = 0;
            for (int c = 0; c < i; ++c) m.set(LetterKind::LoopT, idx++, 1);
            for (int c = 0; c < k; ++c) m.set(LetterKind::LoopTau, idx++, 1);
            for (int c = 0; c < j; ++c) m.set(LetterKind::LoopBigT, idx++, 1);
            break;
        }
        case BasisId::Bprime:
            m.set(LetterKind::LoopT, 0, i);
            m.set(LetterKind::LoopTau, 1, k);
            m.set(LetterKind::LoopBigT, 2, j);
            break;
        case BasisId::ScriptB:
            m.set(LetterKind::LoopT, 0, i);
            m.set(LetterKind::LoopTau, 0, k);
            m.set(LetterKind::LoopBigT, 0, j);
            break;
    }
    return m;
}

inline std::array<int, 3> exponent_triple(const LoopMonomial& m) {
    return {m.exp_t(), m.exp_tau(), m.exp_bigT()};
}

// Block-length-to-exponent map between the bases. Accepts a monomial of any
// of the three bases; the triple of per-family exponent sums is carried over.
inline LoopMonomial homologous(const LoopMonomial& m, BasisId target) {
    if (!m.in_B() && !m.in_Bprime() && !m.in_ScriptB())
        throw UnsupportedState("homologous: monomial is not in a source basis");
    auto [i, k, j] = exponent_triple(m);
    return make_basis_monomial(target, i, k, j);
}

namespace detail {

inline CurveClass family_class(CurveFamily f, int winding) {
    std::string w;
    for (int c = 0; c < winding; ++c) {
        switch (f) {
            case CurveFamily::A: w += 'a'; break;
            case CurveFamily::B: w += 'b'; break;
            case CurveFamily::AB: w += "ab"; break;
            default: throw EngineFault("family_class: not a family");
        }
    }
    auto cc = CurveClass::from_word(w);
    if (!cc) throw EngineFault("family_class: zero winding");
    return *cc;
}

}  // namespace detail

// Canonical crossing-free state of a basis monomial (the empty monomial maps
// to the empty system; as a module element it is delta times it).
inline CurveSystem canonical_state(const LoopMonomial& m, BasisId b) {
    if (!in_basis(m, b))
        throw UnsupportedState("canonical_state: monomial not in basis " + basis_name(b));
    auto [i, k, j] = exponent_triple(m);
    std::vector<CurveClass> comps;
    if (b == BasisId::B) {
        for (int c = 0; c < i; ++c) comps.push_back(detail::family_class(CurveFamily::A, 1));
        for (int c = 0; c < k; ++c) comps.push_back(detail::family_class(CurveFamily::B, 1));
        for (int c = 0; c < j; ++c) comps.push_back(detail::family_class(CurveFamily::AB, 1));
    } else {
        if (i) comps.push_back(detail::family_class(CurveFamily::A, i));
        if (k) comps.push_back(detail::family_class(CurveFamily::B, k));
        if (j) comps.push_back(detail::family_class(CurveFamily::AB, j));
    }
    return CurveSystem(std::move(comps));
}

// Module element realizing a basis monomial (unknot = delta * empty system).
inline SkeinElement monomial_realization(const LoopMonomial& m, BasisId b) {
    CurveSystem s = canonical_state(m, b);
    return SkeinElement::single(s, m.empty() ? loop_value() : LaurentPoly::one());
}

inline bool is_canonical_state(const CurveSystem& s, BasisId b) {
    int seen[3] = {0, 0, 0};
    for (const auto& c : s.components()) {
        auto [fam, wind] = c.family();
        if (fam == CurveFamily::Other) return false;
        int fi = fam == CurveFamily::A ? 0 : fam == CurveFamily::B ? 1 : 2;
        if (b == BasisId::B) {
            if (wind != 1) return false;
        } else {
            if (++seen[fi] > 1) return false;
        }
    }
    return true;
}

inline std::optional<LoopMonomial> state_to_monomial(const CurveSystem& s, BasisId b) {
    if (!is_canonical_state(s, b)) return std::nullopt;
    int i = 0, k = 0, j = 0;
    for (const auto& c : s.components()) {
        auto [fam, wind] = c.family();
        if (fam == CurveFamily::A) i += wind;
        if (fam == CurveFamily::B) k += wind;
        if (fam == CurveFamily::AB) j += wind;
    }
    return make_basis_monomial(b, i, k, j);
}

// Classification inverse: each component realized as a loop-letter word on
// its own strand (a -> t, b -> tau), conjugated to algebraic position.
inline MixedBraidWord word_of_state(const CurveSystem& s) {
    int n = std::max<size_t>(1, s.size());
    std::vector<BraidLetter> ls;
    int strand = 0;
    for (const auto& comp : s.components()) {
        for (int i = strand; i >= 1; --i) ls.push_back(BraidLetter::sigma(i, +1));
        for (char c : comp.word()) {
            switch (c) {
                case 'a': ls.push_back(BraidLetter::t(+1)); break;
                case 'A': ls.push_back(BraidLetter::t(-1)); break;
                case 'b': ls.push_back(BraidLetter::tau(+1)); break;
                case 'B': ls.push_back(BraidLetter::tau(-1)); break;
                default: throw EngineFault("word_of_state: bad class letter");
            }
        }
        for (int i = 1; i <= strand; ++i) ls.push_back(BraidLetter::sigma(i, -1));
        ++strand;
    }
    return MixedBraidWord(n, std::move(ls));
}

// --- family winding polynomials ----------------------------------------------

// Coefficients of the slide relation, computed from the Kauffman weights of
// the one slide crossing and its framing unit.
struct SlideRule {
    LaurentPoly u;  // -A^{-2w}: weight of the x * s_{k-1} term
    LaurentPoly v;  // -A^{-4w}: weight of the s_{k-2} term
    explicit SlideRule(int sign) {
        const LaurentPoly fr = framing_factor(-sign);
        u = fr * LaurentPoly::power_of_A(sign);
        v = fr * LaurentPoly::power_of_A(-sign);
    }
};

// P_k: expansion of the k-fold winding over parallel copies, as a polynomial
// in x (vector of coefficients, degree = index). P_0 = delta, P_1 = x,
// P_k = u x P_{k-1} + v P_{k-2}.
class WindingPolynomials {
  public:
    explicit WindingPolynomials(int sign) : rule_(sign) {}

    const std::vector<LaurentPoly>& P(int k) const {
        while (static_cast<int>(cache_.size()) <= k) grow();
        return cache_[k];
    }

    // Leading coefficient u^{k-1} for k >= 1; always a unit.
    LaurentPoly leading(int k) const {
        const auto& p = P(k);
        return p.back();
    }

    const SlideRule& rule() const { return rule_; }

  private:
    void grow() const {
        if (cache_.empty()) {
            cache_.push_back({loop_value()});                          // P_0
            cache_.push_back({LaurentPoly::zero(), LaurentPoly::one()});  // P_1
            return;
        }
        const auto& p1 = cache_[cache_.size() - 1];
        const auto& p2 = cache_[cache_.size() - 2];
        std::vector<LaurentPoly> next(p1.size() + 1, LaurentPoly::zero());
        for (size_t d = 0; d < p1.size(); ++d) next[d + 1] = rule_.u * p1[d];
        for (size_t d = 0; d < p2.size(); ++d) next[d] += rule_.v * p2[d];
        cache_.push_back(std::move(next));
    }

    SlideRule rule_;
    mutable std::vector<std::vector<LaurentPoly>> cache_;
};

inline const WindingPolynomials& winding_polys_for(int sign) {
    static WindingPolynomials pos(+1), neg(-1);
    return sign > 0 ? pos : neg;
}

inline int family_slide_sign(CurveFamily f) {
    switch (f) {
        case CurveFamily::A: return slide_signs().a;
        case CurveFamily::B: return slide_signs().b;
        case CurveFamily::AB: return slide_signs().ab;
        default: throw EngineFault("family_slide_sign: not a family");
    }
}

inline const WindingPolynomials& winding_polys(CurveFamily f) {
    return winding_polys_for(family_slide_sign(f));
}

namespace detail {

using XPoly = std::vector<LaurentPoly>;  // coefficients by degree in x

inline XPoly xpoly_mul(const XPoly& a, const XPoly& b) {
    XPoly r(a.size() + b.size() - 1, LaurentPoly::zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Expand an x-polynomial over {P_d, d >= 1} plus a constant term:
// returns pairs (winding d, coefficient), d = 0 meaning "no component".
inline std::vector<std::pair<int, LaurentPoly>> to_winding_basis(
    XPoly f, const WindingPolynomials& wp) {
    std::vector<std::pair<int, LaurentPoly>> out;
    for (int d = static_cast<int>(f.size()) - 1; d >= 1; --d) {
        if (f[d].is_zero()) continue;
        LaurentPoly gamma = f[d] * wp.leading(d).unit_inverse();
        const auto& Pd = wp.P(d);
        for (int e = 0; e <= d; ++e) f[e] -= gamma * Pd[e];
        out.emplace_back(d, std::move(gamma));
    }
    if (!f.empty() && !f[0].is_zero()) out.emplace_back(0, f[0]);
    return out;
}

}  // namespace detail

// --- the reduction loop --------------------------------------------------------

struct ReductionStep {
    std::string state;     // state rewritten
    std::string rule;      // rule applied
    std::string before;    // order measure before (image monomial / weight)
    std::string after;     // measures of the replacement states
    bool decreased = true; // strict decrease held for every replacement
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    bool strictly_decreasing = true;
};

using MonomialElement = std::map<LoopMonomial, LaurentPoly, MonomialLess>;

namespace detail {

inline std::string measure_string(const CurveSystem& s) {
    return "w" + std::to_string(system_weight(s)) + ":" + s.to_string();
}

inline int split_excess(const CurveSystem& s) {
    int e = 0;
    for (const auto& c : s.components()) {
        auto [fam, wind] = c.family();
        if (fam != CurveFamily::Other) e += wind - 1;
    }
    return e;
}

inline bool is_positive_word(const std::string& w) {
    for (char c : w)
        if (c != 'a' && c != 'b') return false;
    return true;
}

// Exotic positive component (a positive cyclic word that is no family
// winding). Such a word always has a cyclically adjacent equal-letter pair;
// returns a rotation starting with it.
inline std::string rotate_to_equal_pair(const std::string& w) {
    const size_t n = w.size();
    for (size_t i = 0; i < n; ++i)
        if (w[i] == w[(i + 1) % n]) {
            std::string r = w.substr(i) + w.substr(0, i);
            return r;
        }
    throw EngineFault("no adjacent equal pair in exotic word '" + w + "'");
}

// Total length of exotic components; the measure the exotic phase decreases.
inline int exotic_length(const CurveSystem& s) {
    int e = 0;
    for (const auto& c : s.components())
        if (c.family().first == CurveFamily::Other) e += static_cast<int>(c.word().size());
    return e;
}

// Replace, inside system s, the components at the given positions by a
// winding of the family (0 = none).
inline CurveSystem replace_comps(const CurveSystem& s, size_t p1, size_t p2, CurveFamily fam,
                                 int winding) {
    std::vector<CurveClass> comps;
    for (size_t i = 0; i < s.components().size(); ++i)
        if (i != p1 && i != p2) comps.push_back(s.components()[i]);
    if (winding > 0) comps.push_back(family_class(fam, winding));
    return CurveSystem(std::move(comps));
}

}  // namespace detail

// Reduces a skein element over curve systems to the unique expansion over
// target-basis monomials. Components beyond the three winding families are
// handled when their class word is positive (the hook-slide applies at an
// adjacent equal-letter pair); mixed-sign classes are rejected. EngineFault
// signals a failed internal invariant (order decrease, exact unknot division).
inline std::pair<MonomialElement, ReductionTrace> reduce_to_basis(const SkeinElement& e,
                                                                  BasisId target) {
    for (const auto& [s, c] : e.terms())
        for (const auto& comp : s.components())
            if (comp.family().first == CurveFamily::Other &&
                !detail::is_positive_word(comp.word()))
                throw UnsupportedState("reduce: component class '" + comp.word() +
                                       "' is outside the positive loop classes");

    SkeinElement cur = e;
    ReductionTrace trace;
    const bool toward_parallel = (target == BasisId::B);

    for (;;) {
        // states with exotic components first, then the compare_systems-maximal
        // offending state
        const CurveSystem* worst = nullptr;
        bool worst_exotic = false;
        for (const auto& [s, c] : cur.terms()) {
            bool exotic = detail::exotic_length(s) > 0;
            if (!exotic && is_canonical_state(s, target)) continue;
            if (!worst || (exotic && !worst_exotic) ||
                (exotic == worst_exotic && system_less(*worst, s))) {
                worst = &s;
                worst_exotic = exotic;
            }
        }
        if (!worst) break;
        const CurveSystem s = *worst;
        const LaurentPoly coeff = cur.terms().at(s);
        cur.erase(s);

        ReductionStep step;
        step.state = s.to_string();
        step.before = detail::measure_string(s);

        std::vector<std::pair<CurveSystem, LaurentPoly>> repl;
        bool exotic_step = false;
        if (worst_exotic) {
            // slide one hook off the largest exotic component at an adjacent
            // equal-letter pair: {l l R} -> u^{-1}-weighted split and merge
            exotic_step = true;
            size_t pos = 0;
            size_t best_len = 0;
            for (size_t i = 0; i < s.components().size(); ++i) {
                const auto& c2 = s.components()[i];
                if (c2.family().first == CurveFamily::Other &&
                    c2.word().size() > best_len) {
                    best_len = c2.word().size();
                    pos = i;
                }
            }
            const std::string w = detail::rotate_to_equal_pair(s.components()[pos].word());
            const std::string head(1, w[0]);
            const std::string tail = w.substr(1);          // l R
            const std::string rest = w.substr(2);          // R, nonempty
            step.rule = "hook-slide(" + w + ")";
            const SlideRule sr(w[0] == 'a' ? slide_signs().a : slide_signs().b);

            std::vector<CurveClass> base;
            for (size_t i = 0; i < s.components().size(); ++i)
                if (i != pos) base.push_back(s.components()[i]);

            auto with = [&](std::initializer_list<std::string> words) {
                std::vector<CurveClass> comps = base;
                for (const auto& word : words) {
                    auto c2 = CurveClass::from_word(word);
                    if (!c2) throw EngineFault("hook-slide produced a trivial class");
                    comps.push_back(*c2);
                }
                return CurveSystem(std::move(comps));
            };
            repl.emplace_back(with({head, tail}), sr.u);  // -A^{-2w}
            repl.emplace_back(with({rest}), sr.v);        // -A^{-4w}
        } else if (toward_parallel) {
            // split the largest multiply-wound component
            size_t pos = 0;
            int best = 0;
            CurveFamily bf = CurveFamily::Other;
            for (size_t i = 0; i < s.components().size(); ++i) {
                auto [fam, wind] = s.components()[i].family();
                if (wind > best) {
                    best = wind;
                    bf = fam;
                    pos = i;
                }
            }
            if (best < 2) throw EngineFault("reduce: offending state with nothing to split");
            step.rule = "split(" + s.components()[pos].word() + ")";
            const auto& Pk = winding_polys(bf).P(best);
            for (int d = 0; d < static_cast<int>(Pk.size()); ++d) {
                if (Pk[d].is_zero()) continue;
                std::vector<CurveClass> comps;
                for (size_t i = 0; i < s.components().size(); ++i)
                    if (i != pos) comps.push_back(s.components()[i]);
                for (int c2 = 0; c2 < d; ++c2) comps.push_back(detail::family_class(bf, 1));
                repl.emplace_back(CurveSystem(std::move(comps)), Pk[d]);
            }
        } else {
            // merge two components of the same family (largest windings first)
            CurveFamily fam = CurveFamily::Other;
            std::vector<size_t> pos;
            for (CurveFamily f : {CurveFamily::A, CurveFamily::B, CurveFamily::AB}) {
                pos.clear();
                for (size_t i = 0; i < s.components().size(); ++i)
                    if (s.components()[i].family().first == f) pos.push_back(i);
                if (pos.size() >= 2) {
                    fam = f;
                    break;
                }
            }
            if (fam == CurveFamily::Other)
                throw EngineFault("reduce: offending state with nothing to merge");
            // components are sorted, so the last two are the largest windings
            size_t p1 = pos[pos.size() - 2], p2 = pos[pos.size() - 1];
            int m = s.components()[p1].family().second;
            int n = s.components()[p2].family().second;
            step.rule = "slide-merge(" + s.components()[p1].word() + "," +
                        s.components()[p2].word() + ")";
            const auto& wp = winding_polys(fam);
            detail::XPoly prod = detail::xpoly_mul(wp.P(m), wp.P(n));
            for (auto& [d, gamma] : detail::to_winding_basis(std::move(prod), wp))
                repl.emplace_back(detail::replace_comps(s, p1, p2, fam, d), gamma);
        }

        // strict order decrease for every replacement state
        std::string after;
        bool ok = true;
        const int excess_before = detail::split_excess(s);
        const int exotic_before = detail::exotic_length(s);
        for (const auto& [ns, g] : repl) {
            if (!after.empty()) after += "; ";
            after += detail::measure_string(ns);
            if (exotic_step)
                ok = ok && detail::exotic_length(ns) < exotic_before;
            else if (toward_parallel)
                ok = ok && detail::split_excess(ns) < excess_before;
            else
                ok = ok && system_less(ns, s);
        }
        step.after = after;
        step.decreased = ok;
        trace.steps.push_back(step);
        if (!ok) {
            trace.strictly_decreasing = false;
            throw EngineFault("reduce: rewrite failed to decrease the order measure at state " +
                              s.to_string());
        }

        for (const auto& [ns, g] : repl) cur.add(ns, coeff * g);
    }

    MonomialElement out;
    for (const auto& [s, c] : cur.terms()) {
        if (s.is_empty()) {
            // unknot = delta * empty system
            LaurentPoly q = c.exact_div(loop_value());
            auto [it, fresh] = out.emplace(LoopMonomial::unknot(), q);
            if (!fresh) it->second += q;
        } else {
            auto m = state_to_monomial(s, target);
            if (!m) throw EngineFault("reduce: non-canonical state survived the loop");
            auto [it, fresh] = out.emplace(*m, c);
            if (!fresh) it->second += c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return {std::move(out), std::move(trace)};
}

// --- change of basis -----------------------------------------------------------

inline std::vector<LoopMonomial> enumerate_basis(BasisId b, int bound) {
    std::vector<LoopMonomial> ms;
    for (int total = 0; total <= bound; ++total)
        for (int i = 0; i <= total; ++i)
            for (int k = 0; i + k <= total; ++k)
                ms.push_back(make_basis_monomial(b, i, k, total - i - k));
    std::sort(ms.begin(), ms.end(), monomial_less);
    return ms;
}

struct TriangularityViolation {
    size_t row;
    std::string kind;  // "diagonal-missing" | "diagonal-not-unit" | "above-diagonal"
    std::string detail;
};

struct ChangeOfBasisMatrix {
    BasisId rowBasis, colBasis;
    int bound = 0;
    std::vector<LoopMonomial> row_index, col_index;   // strictly increasing under compare
    std::map<std::pair<size_t, size_t>, LaurentPoly> entries;  // nonzero only
    std::vector<TriangularityViolation> violations;
    std::vector<ReductionTrace> traces;  // one per row

    bool ok() const { return violations.empty(); }

    const LaurentPoly* entry(size_t r, size_t c) const {
        auto it = entries.find({r, c});
        return it == entries.end() ? nullptr : &it->second;
    }
};

inline ChangeOfBasisMatrix change_of_basis(BasisId from, BasisId to, int bound) {
    if (bound < 0) throw ParseError("change_of_basis: bound must be >= 0");
    ChangeOfBasisMatrix M;
    M.rowBasis = from;
    M.colBasis = to;
    M.bound = bound;
    M.row_index = enumerate_basis(from, bound);
    M.col_index = enumerate_basis(to, bound);

    std::map<LoopMonomial, size_t, MonomialLess> col_of;
    for (size_t c = 0; c < M.col_index.size(); ++c) col_of.emplace(M.col_index[c], c);

    for (size_t r = 0; r < M.row_index.size(); ++r) {
        const LoopMonomial& m = M.row_index[r];
        auto [row, trace] = reduce_to_basis(monomial_realization(m, from), to);
        M.traces.push_back(std::move(trace));

        auto [i, k, j] = exponent_triple(m);
        const LoopMonomial diag = make_basis_monomial(to, i, k, j);

        bool saw_diag = false;
        for (const auto& [cm, coeff] : row) {
            auto it = col_of.find(cm);
            if (it == col_of.end()) throw EngineFault("change_of_basis: column out of bound");
            M.entries.emplace(std::make_pair(r, it->second), coeff);
            if (cm == diag) {
                saw_diag = true;
                if (!coeff.is_unit())
                    M.violations.push_back({r, "diagonal-not-unit",
                                            "row " + std::to_string(r) + ": coefficient " +
                                                coeff.to_string()});
            } else if (!monomial_less(cm, diag)) {
                M.violations.push_back(
                    {r, "above-diagonal",
                     "row " + std::to_string(r) + ": nonzero entry at a monomial not below the "
                     "homologous word"});
            }
        }
        if (!saw_diag)
            M.violations.push_back({r, "diagonal-missing", "row " + std::to_string(r)});
    }
    return M;
}

// Entrywise product C = A * B (rows of A expanded through B); used for the
// functoriality check. Requires A.colBasis == B.rowBasis and equal bounds.
inline ChangeOfBasisMatrix matrix_multiply(const ChangeOfBasisMatrix& A,
                                           const ChangeOfBasisMatrix& B) {
    if (A.bound != B.bound) throw EngineFault("matrix_multiply: bounds differ");
    if (!(A.col_index == B.row_index)) throw EngineFault("matrix_multiply: bases mismatch");
    ChangeOfBasisMatrix C;
    C.rowBasis = A.rowBasis;
    C.colBasis = B.colBasis;
    C.bound = A.bound;
    C.row_index = A.row_index;
    C.col_index = B.col_index;
    for (const auto& [rc, a] : A.entries) {
        for (const auto& [kc, b] : B.entries) {
            if (kc.first != rc.second) continue;
            auto key = std::make_pair(rc.first, kc.second);
            auto it = C.entries.find(key);
            if (it == C.entries.end()) {
                LaurentPoly p = a * b;
                if (!p.is_zero()) C.entries.emplace(key, std::move(p));
            } else {
                it->second += a * b;
                if (it->second.is_zero()) C.entries.erase(it);
            }
        }
    }
    return C;
}

}  // namespace h2skein
