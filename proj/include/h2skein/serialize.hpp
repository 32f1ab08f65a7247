#pragma once

// Text and JSON forms of the domain values, plus the two input grammars:
//   words:     whitespace-separated `t`, `tau`, `T`, `s<i>`, optional `^-1`
//              (or `^<k>` as repetition), e.g. "t s1 tau s1^-1"
//   monomials: `t'<i>^<e>`, `tau'<k>^<e>`, `T'<j>^<e>`; index 0 abbreviates
//              to the bare letter; "1" or "" is the empty monomial.

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "h2skein/reduce.hpp"

namespace h2skein {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// --- Laurent ------------------------------------------------------------------

// JSON form: array of [exponent, coefficient] pairs sorted by exponent;
// coefficients as decimal strings (they exceed native integer range).
inline Json laurent_to_json(const LaurentPoly& p) {
    Json a = Json::array();
    for (const auto& [k, c] : p.terms()) a.push_back(Json::array({k, c.str()}));
    return a;
}

inline LaurentPoly laurent_from_json(const Json& a) {
    LaurentPoly p;
    for (const auto& t : a)
        p += LaurentPoly::monomial(t.at(0).get<int>(), BigInt(t.at(1).get<std::string>()));
    return p;
}

// --- monomials ------------------------------------------------------------------

inline std::string monomial_to_string(const LoopMonomial& m) {
    if (m.empty()) return "1";
    std::string s;
    auto emit = [&](const char* base, const std::map<int, int>& fam) {
        for (const auto& [i, e] : fam) {
            if (!s.empty()) s += " ";
            s += std::string(base) + "'" + std::to_string(i) + "^" + std::to_string(e);
        }
    };
    emit("t", m.t);
    emit("tau", m.tau);
    emit("T", m.bigT);
    return s;
}

// Abbreviated human form: index 0 unprimed, exponent 1 dropped.
inline std::string monomial_display(const LoopMonomial& m) {
    if (m.empty()) return "1";
    std::string s;
    auto emit = [&](const char* base, const std::map<int, int>& fam) {
        for (const auto& [i, e] : fam) {
            if (!s.empty()) s += " ";
            s += base;
            if (i != 0) s += "'" + std::to_string(i);
            if (e != 1) s += "^" + std::to_string(e);
        }
    };
    emit("t", m.t);
    emit("tau", m.tau);
    emit("T", m.bigT);
    return s;
}

inline LoopMonomial parse_monomial(const std::string& text) {
    LoopMonomial m;
    std::istringstream in(text);
    std::string tok;
    bool any = false;
    while (in >> tok) {
        any = true;
        if (tok == "1") continue;
        LetterKind kind;
        size_t p = 0;
        if (tok.rfind("tau", 0) == 0) {
            kind = LetterKind::LoopTau;
            p = 3;
        } else if (tok.rfind("t", 0) == 0) {
            kind = LetterKind::LoopT;
            p = 1;
        } else if (tok.rfind("T", 0) == 0) {
            kind = LetterKind::LoopBigT;
            p = 1;
        } else {
            throw ParseError("bad monomial token '" + tok + "'");
        }
        int index = 0, exp = 1;
        if (p < tok.size() && tok[p] == '\'') {
            ++p;
            size_t q = p;
            while (q < tok.size() && isdigit(static_cast<unsigned char>(tok[q]))) ++q;
            if (q == p) throw ParseError("missing index in '" + tok + "'");
            index = std::stoi(tok.substr(p, q - p));
            p = q;
        }
        if (p < tok.size() && tok[p] == '^') {
            ++p;
            size_t q = p;
            while (q < tok.size() && isdigit(static_cast<unsigned char>(tok[q]))) ++q;
            if (q == p || q != tok.size()) throw ParseError("bad exponent in '" + tok + "'");
            exp = std::stoi(tok.substr(p, q - p));
        } else if (p != tok.size()) {
            throw ParseError("bad monomial token '" + tok + "'");
        }
        m.add(kind, index, exp);
    }
    (void)any;
    return m;
}

// --- words ----------------------------------------------------------------------

inline MixedBraidWord parse_word(const std::string& text, int strands = 0) {
    std::vector<BraidLetter> ls;
    std::istringstream in(text);
    std::string tok;
    int max_sigma = 0;
    while (in >> tok) {
        int rep = 1, sign = +1;
        std::string base = tok;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            base = tok.substr(0, caret);
            std::string e = tok.substr(caret + 1);
            try {
                rep = std::stoi(e);
            } catch (...) {
                throw ParseError("bad exponent in '" + tok + "'");
            }
            if (rep < 0) {
                sign = -1;
                rep = -rep;
            }
            if (rep == 0) continue;
        }
        BraidLetter l;
        if (base == "t") {
            l = BraidLetter::t(sign);
        } else if (base == "tau") {
            l = BraidLetter::tau(sign);
        } else if (base == "T") {
            l = BraidLetter::bigT(sign);
        } else if (base.size() >= 2 && base[0] == 's') {
            int idx;
            try {
                idx = std::stoi(base.substr(1));
            } catch (...) {
                throw ParseError("bad word token '" + tok + "'");
            }
            if (idx < 1) throw ParseError("sigma index must be >= 1 in '" + tok + "'");
            l = BraidLetter::sigma(idx, sign);
            max_sigma = std::max(max_sigma, idx);
        } else {
            throw ParseError("bad word token '" + tok + "'");
        }
        for (int r = 0; r < rep; ++r) ls.push_back(l);
    }
    int n = strands > 0 ? strands : std::max(1, max_sigma + 1);
    return MixedBraidWord(n, std::move(ls));
}

// --- skein elements ---------------------------------------------------------------

inline Json system_to_json(const CurveSystem& s) {
    Json a = Json::array();
    for (const auto& c : s.components()) a.push_back(c.word());
    return a;
}

inline Json skein_to_json(const SkeinElement& e) {
    Json a = Json::array();
    for (const auto& [s, c] : e.terms())
        a.push_back(Json{{"system", system_to_json(s)}, {"coeff", laurent_to_json(c)}});
    return a;
}

inline Json monomial_element_to_json(const MonomialElement& e) {
    Json a = Json::array();
    for (const auto& [m, c] : e)
        a.push_back(Json{{"monomial", monomial_to_string(m)}, {"coeff", laurent_to_json(c)}});
    return a;
}

inline std::string monomial_element_to_text(const MonomialElement& e) {
    if (e.empty()) return "0\n";
    std::string out;
    for (const auto& [m, c] : e) {
        std::string cs = c.to_string();
        if (c.terms().size() > 1) cs = "(" + cs + ")";
        out += cs + " * " + monomial_display(m) + "\n";
    }
    return out;
}

// --- matrices ----------------------------------------------------------------------

inline Json matrix_to_json(const ChangeOfBasisMatrix& M) {
    Json rows = Json::array(), cols = Json::array(), entries = Json::array();
    for (const auto& m : M.row_index) rows.push_back(monomial_to_string(m));
    for (const auto& m : M.col_index) cols.push_back(monomial_to_string(m));
    for (const auto& [rc, p] : M.entries)
        entries.push_back(Json{{"row", rc.first}, {"col", rc.second},
                               {"coeff", laurent_to_json(p)},
                               {"text", p.to_string()}});
    Json viol = Json::array();
    for (const auto& v : M.violations)
        viol.push_back(Json{{"row", v.row}, {"kind", v.kind}, {"detail", v.detail}});
    return Json{{"from", basis_name(M.rowBasis)},
                {"to", basis_name(M.colBasis)},
                {"bound", M.bound},
                {"rows", rows},
                {"cols", cols},
                {"entries", entries},
                {"report",
                 Json{{"triangular_unit_diagonal", M.ok()}, {"violations", viol}}}};
}

inline std::string matrix_to_csv(const ChangeOfBasisMatrix& M) {
    std::string out = "row\\col";
    for (const auto& c : M.col_index) out += "," + monomial_to_string(c);
    out += "\n";
    for (size_t r = 0; r < M.row_index.size(); ++r) {
        out += monomial_to_string(M.row_index[r]);
        for (size_t c = 0; c < M.col_index.size(); ++c) {
            out += ",";
            if (const auto* p = M.entry(r, c)) out += p->to_string();
            else out += "0";
        }
        out += "\n";
    }
    out += M.ok() ? "# report: PASS (lower triangular, unit diagonal)\n"
                  : "# report: FAIL\n";
    for (const auto& v : M.violations) out += "# violation: " + v.kind + " " + v.detail + "\n";
    return out;
}

}  // namespace h2skein
