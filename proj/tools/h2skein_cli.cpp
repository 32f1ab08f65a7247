// Command-line surface: evaluate mixed braid words into normal form,
// convert basis monomials, compute truncated change-of-basis matrices,
// and run the randomized verification suites.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "h2skein/cache.hpp"
#include "h2skein/reduce.hpp"
#include "h2skein/serialize.hpp"
#include "h2skein/statesum.hpp"
#include "h2skein/verify.hpp"
#include "h2skein/version.hpp"

namespace {

using namespace h2skein;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitEngineFault = 4;
constexpr int kExitMatrixViolation = 5;
constexpr int kExitUnsupported = 6;

BasisId parse_basis(const std::string& s) {
    if (s == "B") return BasisId::B;
    if (s == "Bp" || s == "B'") return BasisId::Bprime;
    if (s == "calB" || s == "scriptB") return BasisId::ScriptB;
    throw ParseError("unknown basis '" + s + "' (expected B, Bp or calB)");
}

std::string text_header(const std::string& input_desc) {
    std::string h;
    h += "# h2skein " + std::string(kEngineVersion) + "\n";
    h += "# conventions: " + conventions_string() + "\n";
    h += "# note: the empty monomial denotes the unknot; results are relative to the\n";
    h += "#       empty system, unknot = delta * empty\n";
    if (!input_desc.empty()) h += "# " + input_desc + "\n";
    return h;
}

Json json_header() {
    return Json{{"schema_version", kSchemaVersion},
                {"engine_version", kEngineVersion},
                {"conventions", conventions_string()},
                {"unknot_convention", "empty monomial = unknot = delta * empty system"}};
}

std::optional<NormalFormCache> open_cache(const std::string& flag_path, bool no_cache) {
    if (no_cache) return std::nullopt;
    std::string dir = flag_path;
    if (dir.empty()) {
        if (const char* env = std::getenv("H2SKEIN_CACHE_DIR")) dir = env;
    }
    if (dir.empty()) return std::nullopt;
    return NormalFormCache(dir);
}

struct ReducedOutput {
    MonomialElement element;
    bool from_cache = false;
};

ReducedOutput reduce_with_cache(const SkeinElement& resolved, BasisId target,
                                const std::string& canonical_input,
                                const std::optional<NormalFormCache>& cache) {
    std::string key;
    if (cache) {
        key = NormalFormCache::make_key(canonical_input, basis_name(target));
        if (auto hit = cache->get(key)) {
            MonomialElement e;
            for (const auto& term : *hit)
                e.emplace(parse_monomial(term.at("monomial").get<std::string>()),
                          laurent_from_json(term.at("coeff")));
            return {std::move(e), true};
        }
    }
    auto [element, trace] = reduce_to_basis(resolved, target);
    if (cache) cache->put(key, monomial_element_to_json(element));
    return {std::move(element), false};
}

void print_reduced(const MonomialElement& e, const std::string& format,
                   const std::string& input_desc, BasisId target) {
    if (format == "json") {
        Json j = json_header();
        j["basis"] = basis_name(target);
        j["input"] = input_desc;
        j["terms"] = monomial_element_to_json(e);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "monomial,coeff\n";
        for (const auto& [m, c] : e)
            std::cout << monomial_to_string(m) << "," << c.to_string() << "\n";
    } else {
        std::cout << text_header(input_desc + "; basis " + basis_name(target));
        std::cout << monomial_element_to_text(e);
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact Kauffman bracket skein module calculator for the genus-2 handlebody"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string cache_path;
    bool no_cache = false;
    int max_crossings = kDefaultCrossingBudget;
    app.add_option("--format", format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache", cache_path, "cache directory (default: $H2SKEIN_CACHE_DIR)");
    app.add_flag("--no-cache", no_cache, "disable the normal-form cache");
    app.add_option("--max-crossings", max_crossings, "state-sum crossing budget");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a mixed braid word's closure");
    std::string word_text, basis_s = "calB";
    int strands = 0;
    eval->add_option("word", word_text, "braid word, e.g. \"t s1 t s1^-1\"");
    eval->add_option("--strands", strands, "moving strand count (default: inferred)");
    eval->add_option("--basis", basis_s, "target basis: B|Bp|calB");

    // convert
    auto* conv = app.add_subcommand("convert", "express a basis monomial in another basis");
    std::string mono_text, from_s = "B", to_s = "calB";
    conv->add_option("monomial", mono_text, "monomial, e.g. \"t'0^2 T'2^1\"")->required();
    conv->add_option("--from", from_s, "source basis")->required();
    conv->add_option("--to", to_s, "target basis")->required();

    // matrix
    auto* mat = app.add_subcommand("matrix", "truncated change-of-basis matrix");
    int bound = 2;
    std::string mfrom = "B", mto = "calB";
    mat->add_option("--from", mfrom, "source basis")->required();
    mat->add_option("--to", mto, "target basis")->required();
    mat->add_option("--bound", bound, "max total exponent")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "run a property suite");
    std::string suite;
    uint64_t samples = 1000, seed = 1;
    ver->add_option("suite", suite, "order|relations|markov|ring")->required();
    ver->add_option("--samples", samples, "sample count");
    ver->add_option("--seed", seed, "RNG seed");

    // bases
    auto* bas = app.add_subcommand("bases", "list basis monomials and their states");
    int bbound = 2;
    bas->add_option("--bound", bbound, "max total exponent");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }
    auto cache = open_cache(cache_path, no_cache);

    if (eval->parsed()) {
        MixedBraidWord w = parse_word(word_text, strands);
        BasisId target = parse_basis(basis_s);
        SkeinElement resolved = resolve(w, max_crossings);
        std::string canon = "word:" + w.to_string() + "|n=" + std::to_string(w.strands);
        auto red = reduce_with_cache(resolved, target, canon, cache);
        print_reduced(red.element, format,
                      "input: " + (word_text.empty() ? std::string("(empty)") : word_text) +
                          " (strands=" + std::to_string(w.strands) + ")",
                      target);
        return kExitOk;
    }

    if (conv->parsed()) {
        LoopMonomial m = parse_monomial(mono_text);
        BasisId from = parse_basis(from_s), to = parse_basis(to_s);
        if (!in_basis(m, from))
            throw ParseError("monomial '" + mono_text + "' is not in basis " + from_s);
        std::string canon = "monomial:" + monomial_to_string(m) + "|from=" + basis_name(from);
        auto red = reduce_with_cache(monomial_realization(m, from), to, canon, cache);
        print_reduced(red.element, format,
                      "input: " + monomial_to_string(m) + " in " + basis_name(from), to);
        return kExitOk;
    }

    if (mat->parsed()) {
        BasisId from = parse_basis(mfrom), to = parse_basis(mto);
        ChangeOfBasisMatrix M = change_of_basis(from, to, bound);
        if (format == "json") {
            Json j = json_header();
            j["matrix"] = matrix_to_json(M);
            std::cout << j.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << matrix_to_csv(M);
        } else {
            std::cout << text_header("matrix " + basis_name(from) + " -> " + basis_name(to) +
                                     ", bound " + std::to_string(bound));
            std::cout << "size: " << M.row_index.size() << " x " << M.col_index.size() << "\n";
            for (const auto& [rc, p] : M.entries)
                std::cout << monomial_to_string(M.row_index[rc.first]) << " -> "
                          << monomial_to_string(M.col_index[rc.second]) << " : "
                          << p.to_string() << "\n";
            std::cout << (M.ok() ? "report: PASS (lower triangular, unit diagonal)\n"
                                 : "report: FAIL\n");
            for (const auto& v : M.violations)
                std::cout << "violation: " << v.kind << " " << v.detail << "\n";
        }
        return M.ok() ? kExitOk : kExitMatrixViolation;
    }

    if (ver->parsed()) {
        VerifyReport rep = run_suite(suite, samples, seed);
        if (format == "json") {
            Json j = json_header();
            j["report"] = rep.to_json();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << text_header("verify " + suite + " --samples " +
                                     std::to_string(samples) + " --seed " +
                                     std::to_string(seed));
            std::cout << "checks: " << rep.checks << "\nviolations: " << rep.violations << "\n";
            for (const auto& w : rep.witnesses) std::cout << "witness: " << w << "\n";
            std::cout << (rep.pass() ? "PASS\n" : "FAIL\n");
        }
        return rep.pass() ? kExitOk : 1;
    }

    if (bas->parsed()) {
        Json out = Json::array();
        for (BasisId b : {BasisId::B, BasisId::Bprime, BasisId::ScriptB}) {
            Json rows = Json::array();
            for (const auto& m : enumerate_basis(b, bbound))
                rows.push_back(Json{{"monomial", monomial_to_string(m)},
                                    {"state", system_to_json(canonical_state(m, b))}});
            out.push_back(Json{{"basis", basis_name(b)}, {"monomials", rows}});
        }
        if (format == "json") {
            Json j = json_header();
            j["bases"] = out;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << text_header("bases up to total exponent " + std::to_string(bbound));
            for (const auto& b : out) {
                std::cout << b["basis"].get<std::string>() << ":\n";
                for (const auto& r : b["monomials"])
                    std::cout << "  " << r["monomial"].get<std::string>() << "  ~  "
                              << r["state"].dump() << "\n";
            }
        }
        return kExitOk;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const h2skein::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const h2skein::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const h2skein::UnsupportedState& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const h2skein::EngineFault& e) {
        std::cerr << "engine fault: " << e.what() << "\n";
        return kExitEngineFault;
    } catch (const CLI::Error&) {
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEngineFault;
    }
}
