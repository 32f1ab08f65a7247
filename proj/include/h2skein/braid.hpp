#pragma once

// Word model for the mixed braid group B_{2,n}: n moving strands braided by
// sigma_i, plus the loop generators t, tau, T which take moving strand 1
// around the first hole, the second hole, or both. The two fixed strands are
// implicit and never carry letters.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace h2skein {

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class LetterKind { Sigma, LoopT, LoopTau, LoopBigT };

struct BraidLetter {
    LetterKind kind = LetterKind::Sigma;
    int index = 1;  // sigma subscript, >= 1; unused for loop letters
    int sign = +1;  // +1 or -1

    static BraidLetter sigma(int i, int s = +1) { return {LetterKind::Sigma, i, s}; }
    static BraidLetter t(int s = +1) { return {LetterKind::LoopT, 0, s}; }
    static BraidLetter tau(int s = +1) { return {LetterKind::LoopTau, 0, s}; }
    static BraidLetter bigT(int s = +1) { return {LetterKind::LoopBigT, 0, s}; }

    BraidLetter inverse() const { return {kind, index, -sign}; }

    friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
        return a.kind == b.kind && a.index == b.index && a.sign == b.sign;
    }
    friend auto operator<=>(const BraidLetter& a, const BraidLetter& b) = default;

    std::string to_string() const {
        std::string s;
        switch (kind) {
            case LetterKind::Sigma: s = "s" + std::to_string(index); break;
            case LetterKind::LoopT: s = "t"; break;
            case LetterKind::LoopTau: s = "tau"; break;
            case LetterKind::LoopBigT: s = "T"; break;
        }
        if (sign < 0) s += "^-1";
        return s;
    }
};

struct MixedBraidWord {
    int strands = 1;  // moving strands, >= 1
    std::vector<BraidLetter> letters;

    MixedBraidWord() = default;
    MixedBraidWord(int n, std::vector<BraidLetter> ls) : strands(n), letters(std::move(ls)) {
        validate();
    }

    void validate() const {
        if (strands < 1) throw ParseError("word needs at least one moving strand");
        for (const auto& l : letters)
            if (l.kind == LetterKind::Sigma && (l.index < 1 || l.index >= strands))
                throw ParseError("sigma index " + std::to_string(l.index) +
                                 " out of range for " + std::to_string(strands) + " strands");
    }

    int crossing_count() const {
        int c = 0;
        for (const auto& l : letters) c += (l.kind == LetterKind::Sigma);
        return c;
    }

    MixedBraidWord concat(const MixedBraidWord& o) const {
        MixedBraidWord r;
        r.strands = std::max(strands, o.strands);
        r.letters = letters;
        r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
        return r;
    }

    MixedBraidWord inverse() const {
        MixedBraidWord r;
        r.strands = strands;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            r.letters.push_back(it->inverse());
        return r;
    }

    friend bool operator==(const MixedBraidWord& a, const MixedBraidWord& b) {
        return a.strands == b.strands && a.letters == b.letters;
    }
    friend auto operator<=>(const MixedBraidWord& a, const MixedBraidWord& b) = default;

    std::string to_string() const {
        std::string s;
        for (const auto& l : letters) {
            if (!s.empty()) s += " ";
            s += l.to_string();
        }
        return s;
    }
};

// Removes adjacent letter-inverse pairs until none remain (not cyclically).
inline MixedBraidWord free_cancel(const MixedBraidWord& w) {
    std::vector<BraidLetter> out;
    for (const auto& l : w.letters) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    }
    return MixedBraidWord(w.strands, std::move(out));
}

// Looping element of Eq-style conjugated form: sigma_i ... sigma_1 loop sigma_1^-1 ... sigma_i^-1,
// acting on moving strand i+1. Index 0 is the bare loop letter.
inline MixedBraidWord expand_looping(LetterKind kind, int index, int sign = +1) {
    if (kind == LetterKind::Sigma) throw ParseError("expand_looping: loop kinds only");
    if (index < 0) throw ParseError("expand_looping: negative index");
    std::vector<BraidLetter> ls;
    for (int i = index; i >= 1; --i) ls.push_back(BraidLetter::sigma(i, +1));
    ls.push_back(BraidLetter{kind, 0, sign});
    for (int i = 1; i <= index; ++i) ls.push_back(BraidLetter::sigma(i, -1));
    return MixedBraidWord(index + 1, std::move(ls));
}

// Monomial in the looping generators t'_i, tau'_k, T'_j (the augmented set L).
// Each family is a sparse map index -> exponent >= 1.
struct LoopMonomial {
    std::map<int, int> t, tau, bigT;

    bool empty() const { return t.empty() && tau.empty() && bigT.empty(); }

    static LoopMonomial unknot() { return LoopMonomial{}; }

    void set(LetterKind kind, int index, int exp) {
        if (exp < 0) throw ParseError("monomial exponent must be >= 0");
        auto& fam = family(kind);
        if (exp == 0)
            fam.erase(index);
        else
            fam[index] = exp;
    }

    void add(LetterKind kind, int index, int exp) {
        if (exp <= 0) return;
        family(kind)[index] += exp;
    }

    std::map<int, int>& family(LetterKind kind) {
        switch (kind) {
            case LetterKind::LoopT: return t;
            case LetterKind::LoopTau: return tau;
            case LetterKind::LoopBigT: return bigT;
            default: throw ParseError("no such loop family");
        }
    }
    const std::map<int, int>& family(LetterKind kind) const {
        return const_cast<LoopMonomial*>(this)->family(kind);
    }

    int exp_t() const { return family_exp(t); }
    int exp_tau() const { return family_exp(tau); }
    int exp_bigT() const { return family_exp(bigT); }
    int exp_total() const { return exp_t() + exp_tau() + exp_bigT(); }

    int max_index() const {
        int m = -1;
        for (const auto* f : {&t, &tau, &bigT})
            if (!f->empty()) m = std::max(m, f->rbegin()->first);
        return m;
    }

    // Przytycki-basis membership: all exponents 1, indices forming consecutive
    // blocks t: 0..p-1, tau: p..p+q-1, T: p+q..p+q+r-1.
    bool in_B() const {
        int next = 0;
        for (const auto* f : {&t, &tau, &bigT}) {
            for (const auto& [i, e] : *f) {
                if (e != 1 || i != next) return false;
                ++next;
            }
        }
        return true;
    }

    // support within {t'_0, tau'_1, T'_2}
    bool in_Bprime() const {
        return only_index(t, 0) && only_index(tau, 1) && only_index(bigT, 2);
    }

    // support within {t, tau, T}
    bool in_ScriptB() const {
        return only_index(t, 0) && only_index(tau, 0) && only_index(bigT, 0);
    }

    friend bool operator==(const LoopMonomial& a, const LoopMonomial& b) {
        return a.t == b.t && a.tau == b.tau && a.bigT == b.bigT;
    }
    friend auto operator<=>(const LoopMonomial& a, const LoopMonomial& b) = default;

  private:
    static int family_exp(const std::map<int, int>& f) {
        int s = 0;
        for (const auto& [i, e] : f) s += e;
        return s;
    }
    static bool only_index(const std::map<int, int>& f, int idx) {
        return f.empty() || (f.size() == 1 && f.begin()->first == idx);
    }
};

// Braid word realizing a monomial: t-letters, then tau-letters, then T-letters
// by ascending index, exponents as repetition, each conjugated to its strand.
// Strand count = 1 + largest index used.
inline MixedBraidWord word_of_monomial(const LoopMonomial& m) {
    int n = std::max(1, m.max_index() + 1);
    std::vector<BraidLetter> ls;
    auto emit = [&](LetterKind kind, const std::map<int, int>& fam) {
        for (const auto& [idx, exp] : fam) {
            MixedBraidWord piece = expand_looping(kind, idx);
            for (int e = 0; e < exp; ++e)
                ls.insert(ls.end(), piece.letters.begin(), piece.letters.end());
        }
    };
    emit(LetterKind::LoopT, m.t);
    emit(LetterKind::LoopTau, m.tau);
    emit(LetterKind::LoopBigT, m.bigT);
    return MixedBraidWord(n, std::move(ls));
}

// --- defining relations -----------------------------------------------------
//
// Both presentations of B_{2,n}:
//   sigma_k sigma_j = sigma_j sigma_k           |k-j| > 1
//   sigma_k sigma_{k+1} sigma_k = sigma_{k+1} sigma_k sigma_{k+1}
//   t sigma_k = sigma_k t                       k >= 2
//   tau sigma_k = sigma_k tau                   k >= 2
//   T sigma_k = sigma_k T                       k >= 2
//   tau sigma_1 tau sigma_1 = sigma_1 tau sigma_1 tau
//   t sigma_1 t sigma_1 = sigma_1 t sigma_1 t
//   tau (sigma_1 t sigma_1^-1) = (sigma_1 t sigma_1^-1) tau
//   t sigma_1 T sigma_1 = sigma_1 T sigma_1 t

struct Relation {
    std::string name;
    std::vector<BraidLetter> lhs, rhs;
    int min_strands = 1;
};

inline std::vector<Relation> defining_relations(int strands) {
    using BL = BraidLetter;
    std::vector<Relation> rels;
    auto add = [&](std::string name, std::vector<BL> l, std::vector<BL> r, int n) {
        if (n <= strands) rels.push_back({std::move(name), std::move(l), std::move(r), n});
    };
    for (int k = 1; k < strands; ++k)
        for (int j = k + 2; j < strands; ++j)
            add("far_commute_s" + std::to_string(k) + "_s" + std::to_string(j),
                {BL::sigma(k), BL::sigma(j)}, {BL::sigma(j), BL::sigma(k)}, j + 1);
    for (int k = 1; k + 1 < strands; ++k)
        add("braid_s" + std::to_string(k),
            {BL::sigma(k), BL::sigma(k + 1), BL::sigma(k)},
            {BL::sigma(k + 1), BL::sigma(k), BL::sigma(k + 1)}, k + 2);
    for (int k = 2; k < strands; ++k) {
        add("t_commute_s" + std::to_string(k), {BL::t(), BL::sigma(k)},
            {BL::sigma(k), BL::t()}, k + 1);
        add("tau_commute_s" + std::to_string(k), {BL::tau(), BL::sigma(k)},
            {BL::sigma(k), BL::tau()}, k + 1);
        add("T_commute_s" + std::to_string(k), {BL::bigT(), BL::sigma(k)},
            {BL::sigma(k), BL::bigT()}, k + 1);
    }
    if (strands >= 2) {
        add("tau_s1_tau_s1", {BL::tau(), BL::sigma(1), BL::tau(), BL::sigma(1)},
            {BL::sigma(1), BL::tau(), BL::sigma(1), BL::tau()}, 2);
        add("t_s1_t_s1", {BL::t(), BL::sigma(1), BL::t(), BL::sigma(1)},
            {BL::sigma(1), BL::t(), BL::sigma(1), BL::t()}, 2);
        add("tau_tprime1", {BL::tau(), BL::sigma(1), BL::t(), BL::sigma(1, -1)},
            {BL::sigma(1), BL::t(), BL::sigma(1, -1), BL::tau()}, 2);
        add("t_s1_T_s1", {BL::t(), BL::sigma(1), BL::bigT(), BL::sigma(1)},
            {BL::sigma(1), BL::bigT(), BL::sigma(1), BL::t()}, 2);
    }
    return rels;
}

// All words obtained from w by one application of a defining relation
// (either direction, any position).
inline std::set<MixedBraidWord> relation_moves(const MixedBraidWord& w) {
    std::set<MixedBraidWord> out;
    auto try_rewrite = [&](const std::vector<BraidLetter>& pat,
                           const std::vector<BraidLetter>& rep) {
        if (pat.size() > w.letters.size()) return;
        for (size_t p = 0; p + pat.size() <= w.letters.size(); ++p) {
            bool match = true;
            for (size_t q = 0; q < pat.size(); ++q)
                if (!(w.letters[p + q] == pat[q])) {
                    match = false;
                    break;
                }
            if (!match) continue;
            std::vector<BraidLetter> ls(w.letters.begin(), w.letters.begin() + p);
            ls.insert(ls.end(), rep.begin(), rep.end());
            ls.insert(ls.end(), w.letters.begin() + p + pat.size(), w.letters.end());
            out.insert(MixedBraidWord(w.strands, std::move(ls)));
        }
    };
    for (const auto& r : defining_relations(w.strands)) {
        try_rewrite(r.lhs, r.rhs);
        try_rewrite(r.rhs, r.lhs);
    }
    return out;
}

// Generators available on a given strand count (used for conjugation tests).
inline std::vector<BraidLetter> generators(int strands) {
    std::vector<BraidLetter> g = {BraidLetter::t(), BraidLetter::tau(), BraidLetter::bigT()};
    for (int i = 1; i < strands; ++i) g.push_back(BraidLetter::sigma(i));
    return g;
}

struct MarkovVariants {
    std::vector<MixedBraidWord> conjugates;      // g w g^-1, closure-equal
    MixedBraidWord stab_pos, stab_neg;           // w sigma_n^{+-1} on n+1 strands
    std::optional<MixedBraidWord> destabilized;  // if w = v sigma_{n-1}^{+-1} with v off strand n
};

inline MarkovVariants markov_variants(const MixedBraidWord& w) {
    MarkovVariants mv;
    for (const auto& g : generators(w.strands)) {
        std::vector<BraidLetter> ls;
        ls.push_back(g);
        ls.insert(ls.end(), w.letters.begin(), w.letters.end());
        ls.push_back(g.inverse());
        mv.conjugates.push_back(MixedBraidWord(w.strands, std::move(ls)));
    }
    auto stab = [&](int sign) {
        MixedBraidWord r;
        r.strands = w.strands + 1;
        r.letters = w.letters;
        r.letters.push_back(BraidLetter::sigma(w.strands, sign));
        return r;
    };
    mv.stab_pos = stab(+1);
    mv.stab_neg = stab(-1);
    if (w.strands >= 2 && !w.letters.empty()) {
        const auto& last = w.letters.back();
        if (last.kind == LetterKind::Sigma && last.index == w.strands - 1) {
            bool clean = true;
            for (size_t i = 0; i + 1 < w.letters.size(); ++i)
                if (w.letters[i].kind == LetterKind::Sigma &&
                    w.letters[i].index == w.strands - 1) {
                    clean = false;
                    break;
                }
            if (clean) {
                std::vector<BraidLetter> ls(w.letters.begin(), w.letters.end() - 1);
                mv.destabilized = MixedBraidWord(w.strands - 1, std::move(ls));
            }
        }
    }
    return mv;
}

}  // namespace h2skein
