#include <catch2/catch_amalgamated.hpp>

#include "h2skein/order.hpp"
#include "h2skein/reduce.hpp"
#include "h2skein/serialize.hpp"
#include "h2skein/verify.hpp"

using namespace h2skein;

TEST_CASE("stats") {
    LoopMonomial m = parse_monomial("t'0 t'1");
    MonomialStats s = stats(m);
    CHECK(s.expTotal == 2);
    CHECK(s.indT == 1);
    CHECK(s.lenT == 1);
    CHECK_FALSE(s.indTau.has_value());
    CHECK_FALSE(s.indT_.has_value());

    s = stats(parse_monomial("t^2 tau'1^3 T'2"));
    CHECK(s.expTotal == 6);
    CHECK(s.indT == 0);
    CHECK(s.indTau == 1);
    CHECK(s.indT_ == 2);
    CHECK(s.expT == 2);
    CHECK(s.expTau == 3);
    CHECK(s.expBigT == 1);

    s = stats(LoopMonomial::unknot());
    CHECK(s.expTotal == 0);
    CHECK_FALSE(s.indT.has_value());
    CHECK(s.lenT == 0);
}

TEST_CASE("compare clauses") {
    auto cmp = [](const char* a, const char* b) {
        return compare(parse_monomial(a), parse_monomial(b));
    };
    // equal totals, tau-index decides (absence is -infinity)
    CHECK(cmp("t", "tau'1") == Ordering::Less);
    // all indices tie except ind_t
    CHECK(cmp("t^2", "t'0 t'1") == Ordering::Less);
    // total exponent first
    CHECK(cmp("T", "t tau") == Ordering::Less);
    CHECK(cmp("t^3", "t tau T^2") == Ordering::Less);
    // smaller index at the first difference makes the monomial greater
    CHECK(cmp("t'0 t'2", "t'1 t'2") == Ordering::Greater);
    // exponents scanned from the highest index downward; smaller -> Less
    CHECK(cmp("t'0^2 t'1", "t'0 t'1^2") == Ordering::Less);
    CHECK(cmp("t tau^2", "t^2 tau") == Ordering::Greater);
    CHECK(cmp("t tau", "t tau") == Ordering::Equal);
    // empty is minimal
    CHECK(compare(LoopMonomial::unknot(), parse_monomial("t")) == Ordering::Less);
}

TEST_CASE("order axioms (fuzz)") {
    auto rep = verify_order(3000, 5);
    INFO((rep.witnesses.empty() ? std::string() : rep.witnesses.front()));
    CHECK(rep.violations == 0);
}

TEST_CASE("compare_systems examples") {
    auto mk = [](std::initializer_list<const char*> ws) {
        std::vector<CurveClass> cs;
        for (auto w : ws) cs.push_back(*CurveClass::from_word(w));
        return CurveSystem(std::move(cs));
    };
    CHECK(compare_systems(mk({"a"}), mk({"a", "a"})) == Ordering::Less);
    CHECK(compare_systems(mk({"ab"}), mk({"a", "b"})) == Ordering::Less);
    CHECK(compare_systems(CurveSystem::empty(), mk({"b"})) == Ordering::Less);
    CHECK(compare_systems(mk({"aa"}), mk({"aa"})) == Ordering::Equal);
    // winding weight, not letter count: T-state below t^2-state
    CHECK(compare_systems(mk({"ab"}), mk({"aa"})) == Ordering::Less);
}

// The system order restricted to basis states agrees with the monomial order.
TEST_CASE("compare_systems consistent with compare on basis states") {
    for (BasisId b : {BasisId::B, BasisId::Bprime, BasisId::ScriptB}) {
        auto ms = enumerate_basis(b, 3);
        for (size_t i = 0; i < ms.size(); ++i)
            for (size_t j = 0; j < ms.size(); ++j) {
                Ordering om = compare(ms[i], ms[j]);
                Ordering os =
                    compare_systems(canonical_state(ms[i], b), canonical_state(ms[j], b));
                INFO(basis_name(b) << ": " << monomial_to_string(ms[i]) << " vs "
                                   << monomial_to_string(ms[j]));
                CHECK(om == os);
            }
    }
}

TEST_CASE("homologous preserves the total exponent") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        std::uniform_int_distribution<int> d(0, 3);
        LoopMonomial m = make_basis_monomial(BasisId::B, d(rng), d(rng), d(rng));
        for (BasisId b : {BasisId::B, BasisId::Bprime, BasisId::ScriptB})
            CHECK(stats(homologous(m, b)).expTotal == stats(m).expTotal);
    }
}
