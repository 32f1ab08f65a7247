#pragma once

// Kauffman bracket resolution of mixed braid closures. Every sigma letter is
// smoothed both ways (sigma^+1: identity with weight A, hook with weight A^-1;
// sigma^-1 dually); loop letters decorate whatever wire they sit on. Each of
// the 2^c crossing-free states is traced into closed components, each
// component classified by its free-homotopy class in the rank-2 free group
// of loops around the two holes, and trivial components absorbed as delta.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "h2skein/braid.hpp"
#include "h2skein/laurent.hpp"

namespace h2skein {

class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kDefaultCrossingBudget = 24;

// --- curve classes -----------------------------------------------------------
//
// Letters: 'a' loop around hole 1, 'b' around hole 2; uppercase = inverse.
// A class is a cyclically reduced cyclic word, canonical under rotation and
// inversion. The empty word is the trivial class (not stored in systems).

inline char invert_letter(char c) {
    switch (c) {
        case 'a': return 'A';
        case 'A': return 'a';
        case 'b': return 'B';
        case 'B': return 'b';
    }
    throw EngineFault("bad curve letter");
}

inline int letter_rank(char c) {
    switch (c) {
        case 'a': return 0;
        case 'b': return 1;
        case 'A': return 2;
        case 'B': return 3;
    }
    throw EngineFault("bad curve letter");
}

namespace detail {

inline bool rank_less(const std::string& x, const std::string& y) {
    for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
        int rx = letter_rank(x[i]), ry = letter_rank(y[i]);
        if (rx != ry) return rx < ry;
    }
    return x.size() < y.size();
}

// Cyclic reduction: cancel adjacent inverse pairs, including across the seam.
inline std::string cyclic_reduce(std::string w) {
    std::string s;
    for (char c : w) {
        if (!s.empty() && s.back() == invert_letter(c))
            s.pop_back();
        else
            s.push_back(c);
    }
    size_t lo = 0, hi = s.size();
    while (hi - lo >= 2 && s[lo] == invert_letter(s[hi - 1])) {
        ++lo;
        --hi;
    }
    return s.substr(lo, hi - lo);
}

inline std::string min_rotation(const std::string& w) {
    if (w.empty()) return w;
    std::string best = w;
    std::string cur = w;
    for (size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (rank_less(cur, best)) best = cur;
    }
    return best;
}

inline std::string invert_word(const std::string& w) {
    std::string r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(invert_letter(*it));
    return r;
}

}  // namespace detail

enum class CurveFamily { A, B, AB, Other };

// Canonical representative of a free homotopy class.
class CurveClass {
  public:
    CurveClass() = default;

    // Canonicalizes; returns nullopt for the trivial class.
    static std::optional<CurveClass> from_word(const std::string& raw) {
        std::string w = detail::cyclic_reduce(raw);
        if (w.empty()) return std::nullopt;
        std::string c1 = detail::min_rotation(w);
        std::string c2 = detail::min_rotation(detail::invert_word(w));
        CurveClass c;
        c.word_ = detail::rank_less(c2, c1) ? c2 : c1;
        return c;
    }

    const std::string& word() const { return word_; }

    // a^i / b^k / (ab)^j detection, with winding.
    std::pair<CurveFamily, int> family() const {
        if (!word_.empty()) {
            bool allA = true, allB = true;
            for (char c : word_) {
                allA &= (c == 'a');
                allB &= (c == 'b');
            }
            if (allA) return {CurveFamily::A, static_cast<int>(word_.size())};
            if (allB) return {CurveFamily::B, static_cast<int>(word_.size())};
            if (word_.size() % 2 == 0) {
                bool ab = true;
                for (size_t i = 0; i < word_.size(); i += 2)
                    ab &= (word_[i] == 'a' && word_[i + 1] == 'b');
                if (ab) return {CurveFamily::AB, static_cast<int>(word_.size() / 2)};
            }
        }
        return {CurveFamily::Other, 0};
    }

    friend bool operator==(const CurveClass& x, const CurveClass& y) {
        return x.word_ == y.word_;
    }
    friend bool operator<(const CurveClass& x, const CurveClass& y) {
        if (x.word_.size() != y.word_.size()) return x.word_.size() < y.word_.size();
        return detail::rank_less(x.word_, y.word_);
    }

  private:
    std::string word_;
};

// Crossing-free state: multiset of nontrivial classes, kept sorted.
class CurveSystem {
  public:
    CurveSystem() = default;
    explicit CurveSystem(std::vector<CurveClass> comps) : comps_(std::move(comps)) {
        std::sort(comps_.begin(), comps_.end());
    }

    static CurveSystem empty() { return CurveSystem{}; }

    const std::vector<CurveClass>& components() const { return comps_; }
    bool is_empty() const { return comps_.empty(); }
    size_t size() const { return comps_.size(); }

    CurveSystem with(const CurveClass& c) const {
        auto v = comps_;
        v.push_back(c);
        return CurveSystem(std::move(v));
    }

    friend bool operator==(const CurveSystem& x, const CurveSystem& y) {
        return x.comps_ == y.comps_;
    }
    friend bool operator<(const CurveSystem& x, const CurveSystem& y) {
        return std::lexicographical_compare(x.comps_.begin(), x.comps_.end(),
                                            y.comps_.begin(), y.comps_.end());
    }

    std::string to_string() const {
        std::string s = "{";
        for (size_t i = 0; i < comps_.size(); ++i) {
            if (i) s += ", ";
            s += comps_[i].word();
        }
        return s + "}";
    }

  private:
    std::vector<CurveClass> comps_;
};

// Finite formal Z[A^{+-1}]-combination of curve systems.
class SkeinElement {
  public:
    SkeinElement() = default;

    static SkeinElement single(const CurveSystem& s, LaurentPoly c = LaurentPoly::one()) {
        SkeinElement e;
        e.add(s, c);
        return e;
    }

    const std::map<CurveSystem, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const CurveSystem& s, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(s);
        if (it == terms_.end()) {
            terms_.emplace(s, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void erase(const CurveSystem& s) { terms_.erase(s); }

    SkeinElement& operator+=(const SkeinElement& o) {
        for (const auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }
    friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }

    friend SkeinElement operator*(const LaurentPoly& c, const SkeinElement& e) {
        SkeinElement r;
        for (const auto& [s, p] : e.terms_) r.add(s, c * p);
        return r;
    }

    friend bool operator==(const SkeinElement& a, const SkeinElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SkeinElement& a, const SkeinElement& b) { return !(a == b); }

  private:
    std::map<CurveSystem, LaurentPoly> terms_;
};

// One traversed loop letter of a component trace.
struct TraceMark {
    LetterKind kind;  // LoopT / LoopTau / LoopBigT
    int sign;         // +1 / -1 after accounting for traversal direction
};

// Maps a component trace to its class: t -> a, tau -> b, T -> ab (inverses and
// reversed traversal invert blocks); empty after reduction means trivial.
inline std::optional<CurveClass> classify_component(const std::vector<TraceMark>& trace) {
    std::string w;
    for (const auto& m : trace) {
        switch (m.kind) {
            case LetterKind::LoopT: w += (m.sign > 0 ? "a" : "A"); break;
            case LetterKind::LoopTau: w += (m.sign > 0 ? "b" : "B"); break;
            case LetterKind::LoopBigT: w += (m.sign > 0 ? "ab" : "BA"); break;
            default: throw EngineFault("sigma letter in component trace");
        }
    }
    return CurveClass::from_word(w);
}

// --- the resolution ----------------------------------------------------------

namespace detail {

struct Segment {
    std::vector<std::pair<LetterKind, int>> marks;  // loop letters, top to bottom
};

// Per smoothing state: build the 1-manifold of a state's closure and classify
// its components. Ends are numbered 2s (top of segment s) and 2s+1 (bottom).
struct StateTracer {
    int strands;
    std::vector<Segment> segs;
    std::vector<int> glue;          // end -> end
    std::vector<int> current;      // wire -> segment id
    std::vector<int> top_segment;  // wire -> first segment id

    explicit StateTracer(int n) : strands(n) {
        segs.reserve(2 * n);
        current.resize(n);
        top_segment.resize(n);
        for (int p = 0; p < n; ++p) {
            current[p] = new_segment();
            top_segment[p] = current[p];
        }
    }

    int new_segment() {
        segs.emplace_back();
        glue.push_back(-1);
        glue.push_back(-1);
        return static_cast<int>(segs.size()) - 1;
    }

    static int top_end(int s) { return 2 * s; }
    static int bottom_end(int s) { return 2 * s + 1; }

    void join(int e1, int e2) {
        glue[e1] = e2;
        glue[e2] = e1;
    }

    void mark(int wire, LetterKind kind, int sign) {
        segs[current[wire]].marks.emplace_back(kind, sign);
    }

    // Cup-cap smoothing at wires (i, i+1): cap joins the incoming segment
    // bottoms, cup joins the tops of two fresh segments below.
    void hook(int i) {
        int l = current[i], r = current[i + 1];
        join(bottom_end(l), bottom_end(r));
        int nl = new_segment(), nr = new_segment();
        join(top_end(nl), top_end(nr));
        current[i] = nl;
        current[i + 1] = nr;
    }

    // Braid closure: bottom of each wire's last segment to top of its first;
    // then walk the circles.
    template <typename Sink>
    void close_and_classify(Sink&& sink) {
        for (int p = 0; p < strands; ++p)
            join(bottom_end(current[p]), top_end(top_segment[p]));

        std::vector<char> seen(segs.size(), 0);
        std::vector<TraceMark> trace;
        for (size_t s0 = 0; s0 < segs.size(); ++s0) {
            if (seen[s0]) continue;
            trace.clear();
            int seg = static_cast<int>(s0);
            bool down = true;  // entering at the top, moving downward
            do {
                seen[seg] = 1;
                const auto& marks = segs[seg].marks;
                if (down) {
                    for (const auto& [k, sg] : marks) trace.push_back({k, sg});
                } else {
                    for (auto it = marks.rbegin(); it != marks.rend(); ++it)
                        trace.push_back({it->first, -it->second});
                }
                int exit = down ? bottom_end(seg) : top_end(seg);
                int entry = glue[exit];
                seg = entry / 2;
                down = (entry % 2 == 0);
            } while (seg != static_cast<int>(s0) || !down);
            sink(trace);
        }
    }
};

}  // namespace detail

// Callback receives each smoothing state: (system, unit weight +-A^k, trivial-loop count).
using StateSink =
    std::function<void(const CurveSystem&, const LaurentPoly&, int)>;

inline void resolve_states(const MixedBraidWord& w, const StateSink& sink,
                           int budget = kDefaultCrossingBudget) {
    w.validate();
    const int c = w.crossing_count();
    if (c > budget)
        throw BudgetExceeded("word has " + std::to_string(c) + " crossings; budget " +
                             std::to_string(budget));

    std::vector<size_t> sigma_pos;
    for (size_t i = 0; i < w.letters.size(); ++i)
        if (w.letters[i].kind == LetterKind::Sigma) sigma_pos.push_back(i);

    const uint64_t nstates = uint64_t{1} << c;
    for (uint64_t mask = 0; mask < nstates; ++mask) {
        detail::StateTracer tracer(w.strands);
        int a_weight = 0;  // exponent of A from the smoothing choices
        int ci = 0;
        for (const auto& l : w.letters) {
            if (l.kind == LetterKind::Sigma) {
                const bool hook = (mask >> ci) & 1;
                ++ci;
                // sigma^+1: identity A, hook A^-1; sigma^-1 mirrored.
                a_weight += hook ? -l.sign : l.sign;
                if (hook) tracer.hook(l.index - 1);
            } else {
                tracer.mark(0, l.kind, l.sign);
            }
        }
        std::vector<CurveClass> comps;
        int trivial = 0;
        tracer.close_and_classify([&](const std::vector<TraceMark>& trace) {
            auto cls = classify_component(trace);
            if (cls)
                comps.push_back(*cls);
            else
                ++trivial;
        });
        sink(CurveSystem(std::move(comps)), LaurentPoly::power_of_A(a_weight), trivial);
    }
}

// Exact image of the closure of w in the skein module, over crossing-free states.
inline SkeinElement resolve(const MixedBraidWord& w, int budget = kDefaultCrossingBudget) {
    SkeinElement e;
    resolve_states(
        w,
        [&](const CurveSystem& sys, const LaurentPoly& weight, int trivial) {
            e.add(sys, weight * loop_value_pow(trivial));
        },
        budget);
    return e;
}

// Ratio resolve(w sigma_n^{sign}) / resolve(w); must be exactly -A^{+-3}.
inline LaurentPoly normalize_framing_check(const MixedBraidWord& w, int sign = +1,
                                           int budget = kDefaultCrossingBudget) {
    SkeinElement base = resolve(w, budget);
    MixedBraidWord stab;
    stab.strands = w.strands + 1;
    stab.letters = w.letters;
    stab.letters.push_back(BraidLetter::sigma(w.strands, sign));
    SkeinElement up = resolve(stab, budget);

    const LaurentPoly expected = framing_factor(sign);
    SkeinElement scaled;
    for (const auto& [s, c] : base.terms()) scaled.add(s, c * expected);
    if (!(scaled == up))
        throw EngineFault("framing check failed: stabilization is not a -A^{+-3} multiple");
    return expected;
}

}  // namespace h2skein
