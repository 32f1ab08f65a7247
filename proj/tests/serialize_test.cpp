#include <catch2/catch_amalgamated.hpp>

#include "h2skein/serialize.hpp"
#include "h2skein/verify.hpp"

using namespace h2skein;

TEST_CASE("laurent json round trip") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p = random_laurent(rng, 5, 8, 1000);
        CHECK(laurent_from_json(laurent_to_json(p)) == p);
    }
    // big coefficients survive the string form
    LaurentPoly big = LaurentPoly::monomial(1, BigInt("123456789012345678901234567890"));
    CHECK(laurent_from_json(laurent_to_json(big)) == big);
}

TEST_CASE("monomial strings") {
    LoopMonomial m = parse_monomial("t'0^2 T'2^1");
    CHECK(monomial_to_string(m) == "t'0^2 T'2^1");
    CHECK(monomial_display(m) == "t^2 T'2");
    CHECK(monomial_to_string(LoopMonomial::unknot()) == "1");
    CHECK(parse_monomial("1") == LoopMonomial::unknot());
    CHECK(parse_monomial("") == LoopMonomial::unknot());
    CHECK(parse_monomial("t tau'1^3 T'2") == parse_monomial("t'0^1 tau'1^3 T'2^1"));
    CHECK(parse_monomial(monomial_to_string(m)) == m);
    CHECK_THROWS_AS(parse_monomial("x^2"), ParseError);
    CHECK_THROWS_AS(parse_monomial("t'^2"), ParseError);
}

TEST_CASE("monomial string round trip (fuzz)") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        LoopMonomial m = random_monomial(rng);
        CHECK(parse_monomial(monomial_to_string(m)) == m);
    }
}

TEST_CASE("skein element json") {
    SkeinElement e = resolve(parse_word("t s1 tau s1^-1"));
    Json j = skein_to_json(e);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["system"] == Json::array({"a", "b"}));
    CHECK(laurent_from_json(j[0]["coeff"]) == LaurentPoly::one());
}

TEST_CASE("monomial element text") {
    auto [red, tr] = reduce_to_basis(resolve(parse_word("t s1 t s1^-1")), BasisId::ScriptB);
    std::string text = monomial_element_to_text(red);
    CHECK(text.find("t^2") != std::string::npos);
    CHECK(text.find("-A^2") != std::string::npos);
}
