#pragma once

// Randomized property suites shared by the CLI `verify` command, the unit
// tests and the acceptance gate. Deterministic given the seed.

#include <random>
#include <string>
#include <vector>

#include "h2skein/order.hpp"
#include "h2skein/reduce.hpp"
#include "h2skein/serialize.hpp"
#include "h2skein/statesum.hpp"

namespace h2skein {

struct VerifyReport {
    std::string suite;
    uint64_t samples = 0;
    uint64_t seed = 0;
    uint64_t checks = 0;
    uint64_t violations = 0;
    std::vector<std::string> witnesses;
    bool pass() const { return violations == 0; }

    void fail(const std::string& witness) {
        ++violations;
        if (witnesses.size() < 16) witnesses.push_back(witness);
    }

    Json to_json() const {
        Json w = Json::array();
        for (const auto& s : witnesses) w.push_back(s);
        return Json{{"suite", suite},     {"samples", samples}, {"seed", seed},
                    {"checks", checks},   {"violations", violations},
                    {"pass", pass()},     {"witnesses", w}};
    }
};

// --- generators -----------------------------------------------------------------

inline LoopMonomial random_monomial(std::mt19937_64& rng, int max_index = 6, int max_exp = 4) {
    std::uniform_int_distribution<int> nletters(0, 4), index(0, max_index), exp(1, max_exp),
        fam(0, 2);
    LoopMonomial m;
    int n = nletters(rng);
    for (int i = 0; i < n; ++i) {
        int f = fam(rng);
        LetterKind k = f == 0   ? LetterKind::LoopT
                       : f == 1 ? LetterKind::LoopTau
                                : LetterKind::LoopBigT;
        m.add(k, index(rng), exp(rng));
    }
    return m;
}

// Random mixed braid word. With positive_loops the loop letters are kept
// positive (sigma signs stay free), so the closure's normal form lies in the
// reducer's supported class fragment.
inline MixedBraidWord random_word(std::mt19937_64& rng, int strands, int max_crossings,
                                  int max_loops = 4, bool positive_loops = false) {
    std::uniform_int_distribution<int> sign01(0, 1);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> sigma_idx(1, std::max(1, strands - 1));
    std::uniform_int_distribution<int> len(0, max_crossings + max_loops);
    std::vector<BraidLetter> ls;
    int crossings = 0, loops = 0;
    int want = len(rng);
    while (static_cast<int>(ls.size()) < want) {
        int k = kind(rng);
        int s = sign01(rng) ? +1 : -1;
        if (k == 0 && strands > 1 && crossings < max_crossings) {
            ls.push_back(BraidLetter::sigma(sigma_idx(rng), s));
            ++crossings;
        } else if (k != 0 && loops < max_loops) {
            ls.push_back(BraidLetter{k == 1   ? LetterKind::LoopT
                                     : k == 2 ? LetterKind::LoopTau
                                              : LetterKind::LoopBigT,
                                     0, positive_loops ? +1 : s});
            ++loops;
        } else {
            break;
        }
    }
    return MixedBraidWord(strands, std::move(ls));
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms = 4, int max_exp = 5,
                                  long max_coeff = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms), exp(-max_exp, max_exp);
    std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(exp(rng), coeff(rng));
    return p;
}

// --- suites ---------------------------------------------------------------------

// Totality, antisymmetry, transitivity on random pairs/triples; the empty
// monomial minimal against samples/10 random monomials.
inline VerifyReport verify_order(uint64_t samples, uint64_t seed) {
    VerifyReport rep;
    rep.suite = "order";
    rep.samples = samples;
    rep.seed = seed;
    std::mt19937_64 rng(seed);

    for (uint64_t i = 0; i < samples; ++i) {
        LoopMonomial w = random_monomial(rng), u = random_monomial(rng);
        ++rep.checks;
        Ordering o1 = compare(w, u), o2 = compare(u, w);
        bool eq = (w == u);
        if ((o1 == Ordering::Equal) != eq)
            rep.fail("equality mismatch: " + monomial_to_string(w) + " vs " +
                     monomial_to_string(u));
        if (o1 != flip(o2))
            rep.fail("antisymmetry: " + monomial_to_string(w) + " vs " + monomial_to_string(u));
    }
    for (uint64_t i = 0; i < samples; ++i) {
        LoopMonomial a = random_monomial(rng), b = random_monomial(rng),
                     c = random_monomial(rng);
        ++rep.checks;
        if (compare(a, b) == Ordering::Less && compare(b, c) == Ordering::Less &&
            compare(a, c) != Ordering::Less)
            rep.fail("transitivity: " + monomial_to_string(a) + " < " + monomial_to_string(b) +
                     " < " + monomial_to_string(c));
    }
    const uint64_t min_checks = std::max<uint64_t>(1, samples / 10);
    for (uint64_t i = 0; i < min_checks; ++i) {
        LoopMonomial m = random_monomial(rng);
        ++rep.checks;
        if (!m.empty() && compare(LoopMonomial::unknot(), m) != Ordering::Less)
            rep.fail("minimality: empty not below " + monomial_to_string(m));
        if (compare(LoopMonomial::unknot(), LoopMonomial::unknot()) != Ordering::Equal)
            rep.fail("minimality: empty != empty");
    }
    return rep;
}

// Each defining relation of both presentations, embedded in random contexts:
// the normal forms of both sides agree exactly. The raw state sums of the two
// sides differ by skein-trivial reshuffles in general; reduction reconciles
// them, so this suite audits the rewrite calculus as well.
inline VerifyReport verify_relations(uint64_t samples, uint64_t seed, int max_crossings = 10) {
    VerifyReport rep;
    rep.suite = "relations";
    rep.samples = samples;
    rep.seed = seed;
    std::mt19937_64 rng(seed);

    for (int strands = 2; strands <= 4; ++strands) {
        for (const auto& rel : defining_relations(strands)) {
            int rel_crossings = 0;
            for (const auto& l : rel.lhs) rel_crossings += (l.kind == LetterKind::Sigma);
            for (uint64_t i = 0; i < samples; ++i) {
                int budget_left = std::max(0, max_crossings - rel_crossings);
                MixedBraidWord u = random_word(rng, strands, budget_left / 2, 2, true);
                MixedBraidWord v =
                    random_word(rng, strands, budget_left - u.crossing_count(), 2, true);
                auto normal_form = [&](const std::vector<BraidLetter>& mid) {
                    MixedBraidWord w;
                    w.strands = strands;
                    w.letters = u.letters;
                    w.letters.insert(w.letters.end(), mid.begin(), mid.end());
                    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
                    return reduce_to_basis(resolve(w), BasisId::ScriptB).first;
                };
                ++rep.checks;
                if (normal_form(rel.lhs) != normal_form(rel.rhs))
                    rep.fail(rel.name + " in context u=" + u.to_string() +
                             " v=" + v.to_string());
            }
        }
    }
    return rep;
}

// Conjugation leaves resolved closures exactly invariant; stabilization
// scales them by exactly -A^{+-3}.
inline VerifyReport verify_markov(uint64_t samples, uint64_t seed, int max_crossings = 8) {
    VerifyReport rep;
    rep.suite = "markov";
    rep.samples = samples;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> strands_d(1, 3);

    for (uint64_t i = 0; i < samples; ++i) {
        int strands = strands_d(rng);
        MixedBraidWord w = random_word(rng, strands, std::max(0, max_crossings - 2), 3);
        SkeinElement base = resolve(w);

        auto mv = markov_variants(w);
        for (const auto& g : mv.conjugates) {
            ++rep.checks;
            if (resolve(g) != base) rep.fail("conjugation changed closure of " + w.to_string());
        }
        ++rep.checks;
        SkeinElement sp = resolve(mv.stab_pos);
        if (sp != framing_factor(+1) * base)
            rep.fail("positive stabilization of " + w.to_string());
        ++rep.checks;
        SkeinElement sn = resolve(mv.stab_neg);
        if (sn != framing_factor(-1) * base)
            rep.fail("negative stabilization of " + w.to_string());
    }
    return rep;
}

// Ring axioms of Z[A^{+-1}] on random triples; units closed under product.
inline VerifyReport verify_ring(uint64_t samples, uint64_t seed) {
    VerifyReport rep;
    rep.suite = "ring";
    rep.samples = samples;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> exp(-6, 6), sgn(0, 1);

    for (uint64_t i = 0; i < samples; ++i) {
        LaurentPoly p = random_laurent(rng), q = random_laurent(rng), r = random_laurent(rng);
        ++rep.checks;
        if ((p + q) + r != p + (q + r)) rep.fail("add associativity");
        if (p + q != q + p) rep.fail("add commutativity");
        if ((p * q) * r != p * (q * r)) rep.fail("mul associativity");
        if (p * q != q * p) rep.fail("mul commutativity");
        if (p * (q + r) != p * q + p * r) rep.fail("distributivity");
        if (p + (-p) != LaurentPoly::zero()) rep.fail("additive inverse");
        if (p * LaurentPoly::one() != p) rep.fail("mul identity");
        for (const auto& [k, c] : (p * q + r).terms())
            if (c == 0) rep.fail("stored zero coefficient");
        LaurentPoly u1 = LaurentPoly::monomial(exp(rng), sgn(rng) ? 1 : -1);
        LaurentPoly u2 = LaurentPoly::monomial(exp(rng), sgn(rng) ? 1 : -1);
        if (!(u1 * u2).is_unit()) rep.fail("unit product not a unit");
    }
    return rep;
}

inline VerifyReport run_suite(const std::string& name, uint64_t samples, uint64_t seed) {
    if (name == "order") return verify_order(samples, seed);
    if (name == "relations") return verify_relations(samples, seed);
    if (name == "markov") return verify_markov(samples, seed);
    if (name == "ring") return verify_ring(samples, seed);
    throw ParseError("unknown verify suite '" + name + "'");
}

}  // namespace h2skein
