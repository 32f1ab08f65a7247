#include <catch2/catch_amalgamated.hpp>

#include "h2skein/reduce.hpp"
#include "h2skein/serialize.hpp"

using namespace h2skein;

namespace {
LaurentPoly A(int k) { return LaurentPoly::power_of_A(k); }
}

TEST_CASE("basis enumeration") {
    CHECK(enumerate_basis(BasisId::B, 2).size() == 10);
    CHECK(enumerate_basis(BasisId::Bprime, 4).size() == 35);
    auto ms = enumerate_basis(BasisId::ScriptB, 3);
    for (size_t i = 0; i + 1 < ms.size(); ++i)
        CHECK(compare(ms[i], ms[i + 1]) == Ordering::Less);
    CHECK(ms.front() == LoopMonomial::unknot());
}

TEST_CASE("B to calB at bound 2") {
    auto M = change_of_basis(BasisId::B, BasisId::ScriptB, 2);
    CHECK(M.row_index.size() == 10);
    CHECK(M.col_index.size() == 10);
    CHECK(M.ok());

    // row of t'0 t'1: diagonal at t^2 plus one lower entry at the empty monomial
    auto row_of = [&](const std::string& s) {
        auto m = parse_monomial(s);
        for (size_t r = 0; r < M.row_index.size(); ++r)
            if (M.row_index[r] == m) return r;
        FAIL("row not found");
        return size_t{0};
    };
    auto col_of = [&](const std::string& s) {
        auto m = parse_monomial(s);
        for (size_t c = 0; c < M.col_index.size(); ++c)
            if (M.col_index[c] == m) return c;
        FAIL("col not found");
        return size_t{0};
    };

    size_t r = row_of("t'0 t'1");
    int nonzero = 0;
    for (const auto& [rc, p] : M.entries) nonzero += (rc.first == r);
    CHECK(nonzero == 2);
    REQUIRE(M.entry(r, col_of("t^2")) != nullptr);
    CHECK(*M.entry(r, col_of("t^2")) == -A(2));
    REQUIRE(M.entry(r, col_of("1")) != nullptr);
    CHECK(*M.entry(r, col_of("1")) == -A(-2));

    // row of the empty monomial: single unit diagonal entry
    size_t r0 = row_of("1");
    for (const auto& [rc, p] : M.entries)
        if (rc.first == r0) {
            CHECK(rc.second == col_of("1"));
            CHECK(p == LaurentPoly::one());
        }
}

TEST_CASE("identity conversions") {
    for (BasisId b : {BasisId::B, BasisId::Bprime, BasisId::ScriptB}) {
        auto M = change_of_basis(b, b, 2);
        CHECK(M.ok());
        CHECK(M.entries.size() == M.row_index.size());
        for (const auto& [rc, p] : M.entries) {
            CHECK(rc.first == rc.second);
            CHECK(p == LaurentPoly::one());
        }
    }
    // B' and calB share their geometric realization, so this is the identity too
    auto M = change_of_basis(BasisId::Bprime, BasisId::ScriptB, 3);
    CHECK(M.ok());
    for (const auto& [rc, p] : M.entries) {
        CHECK(rc.first == rc.second);
        CHECK(p == LaurentPoly::one());
    }
}

TEST_CASE("composite equals direct") {
    auto AB = change_of_basis(BasisId::B, BasisId::Bprime, 3);
    auto BC = change_of_basis(BasisId::Bprime, BasisId::ScriptB, 3);
    auto AC = change_of_basis(BasisId::B, BasisId::ScriptB, 3);
    REQUIRE(AB.ok());
    REQUIRE(BC.ok());
    REQUIRE(AC.ok());
    auto prod = matrix_multiply(AB, BC);
    CHECK(prod.entries == AC.entries);
}

TEST_CASE("serialization of matrices") {
    auto M = change_of_basis(BasisId::B, BasisId::Bprime, 1);
    Json j = matrix_to_json(M);
    CHECK(j["report"]["triangular_unit_diagonal"] == true);
    CHECK(j["rows"].size() == 4);
    std::string csv = matrix_to_csv(M);
    CHECK(csv.find("PASS") != std::string::npos);
}
