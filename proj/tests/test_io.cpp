#include <doctest.h>

#include "semialg/commands.hpp"
#include "semialg/derivations.hpp"
#include "semialg/errors.hpp"
#include "semialg/proof_io.hpp"
#include "semialg/system_io.hpp"

using namespace semialg;

TEST_CASE("system parsing") {
    SUBCASE("3-cycle with comments and loose spacing") {
        const auto sys = parse_system(
            "# parity triangle\n"
            "field 2\n"
            "vars 3\n"
            "1*x1 + 1*x2 = 1\n"
            "  x2+x3   =1\n"
            "1*x1 + 1*x3 = 1\n");
        CHECK(sys.p() == 2);
        CHECK(sys.var_count() == 3);
        CHECK(sys.rows().size() == 3);
        CHECK(sys.width() == 2);
        CHECK(sys.rows()[1].coeffs == std::vector<std::uint32_t>{0, 1, 1});
    }
    SUBCASE("coefficients reduce mod p, negatives included") {
        const auto sys = parse_system("field 3\nvars 2\n4*x1 - 1*x2 = -1\n");
        CHECK(sys.rows()[0].coeffs == std::vector<std::uint32_t>{1, 2});
        CHECK(sys.rows()[0].rhs == 2);
    }
    SUBCASE("empty-sum row") {
        const auto sys = parse_system("field 2\nvars 1\n0 = 1\n");
        CHECK(sys.rows()[0].coeffs == std::vector<std::uint32_t>{0});
        CHECK(sys.rows()[0].rhs == 1);
    }
    SUBCASE("non-prime field") {
        CHECK_THROWS_AS(parse_system("field 4\nvars 1\nx1 = 1\n"), LinalgError);
    }
    SUBCASE("index out of range") {
        CHECK_THROWS_AS(parse_system("field 2\nvars 2\nx3 = 1\n"), ParseError);
    }
    SUBCASE("junk") {
        CHECK_THROWS_AS(parse_system(""), ParseError);
        CHECK_THROWS_AS(parse_system("field 2\nvars 2\nx1 + = 1\n"), ParseError);
        CHECK_THROWS_AS(parse_system("vars 2\nfield 2\n"), ParseError);
    }
}

TEST_CASE("system writer round-trips canonical forms") {
    LinSystemFp sys(3, 3);
    sys.add_row({1, 0, 2}, 1);
    sys.add_row({0, 0, 0}, 2);
    const std::string text = system_to_string(sys);
    CHECK(text == "field 3\nvars 3\n1*x1 + 2*x3 = 1\n0 = 2\n");
    const LinSystemFp reread = parse_system(text);
    CHECK(system_to_string(reread) == text);
    CHECK(reread.rows().size() == sys.rows().size());
}

TEST_CASE("proof files round-trip byte-exact after a real pipeline run") {
    LinSystemFp sys(3, 2);
    sys.add_row({1, 1}, 1);
    sys.add_row({2, 2}, 1);
    const auto cert = std::get<Certificate>(solve(sys));
    RefutationReport report = refute_fp(sys, cert);
    const std::string text = proof_to_string(report.proof);
    const Proof reread = proof_from_string(text);
    check(reread);
    CHECK(is_refutation(reread));
    CHECK(proof_to_string(reread) == text);
}

TEST_CASE("proof file errors") {
    CHECK_THROWS_AS(proof_from_string(""), ParseError);
    CHECK_THROWS_AS(proof_from_string("{\"format\":\"nope\"}"), ParseError);
    CHECK_THROWS_AS(proof_from_string("not json"), ParseError);
    CHECK_THROWS_AS(
        proof_from_string("{\"field\":2,\"format\":\"saj1\",\"hypotheses\":[],\"mode\":\"f2\"}\n"
                          "{\"id\":0,\"kind\":\"axiom\"}"),
        ParseError);
}
