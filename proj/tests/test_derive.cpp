#include <doctest.h>

#include <random>

#include "semialg/derivations.hpp"
#include "semialg/errors.hpp"

using namespace semialg;

namespace {

Poly P(const char* text) {
    return Poly::parse(text);
}

VarId x(std::uint32_t i) {
    return VarId::plain(i);
}

void check_builder(ProofBuilder& b) {
    check(b.proof());
}

}  // namespace

TEST_CASE("prove_const_nonneg") {
    ProofBuilder b(VarMode::Plain, 2, {}, x(1));
    CHECK(b.poly(prove_const_nonneg(b, Rational(2))) == P("2"));
    CHECK(b.poly(prove_const_nonneg(b, Rational(0))) == Poly());
    CHECK(b.poly(prove_const_nonneg(b, Rational(-3) * Rational(-4))) == P("12"));
    CHECK_THROWS_AS(prove_const_nonneg(b, Rational(-1)), BuildError);
    check_builder(b);
}

TEST_CASE("prove_eq_mult") {
    SUBCASE("single variable multiplier") {
        ProofBuilder b(VarMode::Plain, 2, {}, x(1));
        const EqProof boolean = b.eq_of_bool(x(1));  // x1^2 - x1 = 0
        const EqProof eq = prove_eq_mult(b, boolean, P("x2"));
        CHECK(b.eq_poly(eq) == P("x1^2*x2 - x1*x2"));
        CHECK(b.poly(eq.bwd) == -b.eq_poly(eq));
        check_builder(b);
    }
    SUBCASE("negative constant multiplier swaps directions") {
        ProofBuilder b(VarMode::Plain, 2, {}, x(1));
        const EqProof boolean = b.eq_of_bool(x(1));
        const EqProof eq = prove_eq_mult(b, boolean, P("-3"));
        CHECK(b.eq_poly(eq) == P("-3*x1^2 + 3*x1"));
        check_builder(b);
    }
    SUBCASE("indicator-sum axiom times a variable") {
        LinSystemFp sys(3, 1);
        const auto bank = HypothesisBank::for_fp(sys);
        ProofBuilder b(VarMode::Indicator, 3, bank.polys(), VarId::indicator(1, 0));
        const EqProof zeq = b.eq_of_hyps(bank.z_index(0, false), bank.z_index(0, true));
        const EqProof eq = prove_eq_mult(b, zeq, P("x1_0"));
        CHECK(b.eq_poly(eq) ==
              P("x1_0") * (P("x1_0 + x1_1 + x1_2") - Poly::one()));
        check_builder(b);
    }
}

TEST_CASE("prove_ideal_rewrite") {
    SUBCASE("x1^3 rewrites to x1") {
        ProofBuilder b(VarMode::Plain, 2, {}, x(1));
        const EqProof boolean = b.eq_of_bool(x(1));
        const EqProof eq =
            prove_ideal_rewrite(b, P("x1^3"), P("x1"), {{P("x1 + 1"), boolean}});
        CHECK(b.eq_poly(eq) == P("x1^3 - x1"));
        check_builder(b);
    }
    SUBCASE("empty decomposition for identical sides") {
        ProofBuilder b(VarMode::Plain, 2, {}, x(1));
        const EqProof eq = prove_ideal_rewrite(b, P("x1*x2"), P("x1*x2"), {});
        CHECK(b.eq_poly(eq) == Poly());
        check_builder(b);
    }
    SUBCASE("wrong cofactor is refused, nothing is emitted") {
        ProofBuilder b(VarMode::Plain, 2, {}, x(1));
        const EqProof boolean = b.eq_of_bool(x(1));
        const std::size_t before = b.line_count();
        CHECK_THROWS_AS(
            prove_ideal_rewrite(b, P("x1^2*x2"), P("x1*x2"), {{P("x2 + 1"), boolean}}),
            BuildError);
        CHECK(b.line_count() == before);
        check_builder(b);
    }
}

TEST_CASE("prove_ortho") {
    SUBCASE("p = 2") {
        LinSystemFp sys(2, 1);
        const auto bank = HypothesisBank::for_fp(sys);
        ProofBuilder b(VarMode::Indicator, 2, bank.polys(), VarId::indicator(1, 0));
        const EqProof eq = prove_ortho(b, bank, 0, 0, 1, 2);
        CHECK(b.eq_poly(eq) == P("x1_0*x1_1"));
        const Proof proof = b.take_proof();
        CHECK(check(proof).degree <= 3);
        const auto probe = soundness_probe(
            proof, {VarId::indicator(1, 0), VarId::indicator(1, 1)});
        CHECK(probe.ok());
    }
    SUBCASE("p = 3, values 0 and 2") {
        LinSystemFp sys(3, 2);
        const auto bank = HypothesisBank::for_fp(sys);
        ProofBuilder b(VarMode::Indicator, 3, bank.polys(), VarId::indicator(1, 0));
        const EqProof eq = prove_ortho(b, bank, 1, 0, 2, 3);
        CHECK(b.eq_poly(eq) == P("x2_0*x2_2"));
        CHECK(check(b.proof()).degree <= 3);
    }
    SUBCASE("equal values rejected") {
        LinSystemFp sys(3, 1);
        const auto bank = HypothesisBank::for_fp(sys);
        ProofBuilder b(VarMode::Indicator, 3, bank.polys(), VarId::indicator(1, 0));
        CHECK_THROWS_AS(prove_ortho(b, bank, 0, 1, 1, 3), BuildError);
    }
}

TEST_CASE("prove_gap") {
    SUBCASE("D_1(x1) is the boolean gap") {
        ProofBuilder b(VarMode::Plain, 2, {}, x(1));
        const LineId id = prove_gap(b, P("x1"), 1);
        CHECK(b.poly(id) == P("x1^2 - x1"));
        CHECK(check(b.proof()).degree == 2);
    }
    SUBCASE("D_1(x1 + x2) and its Boolean values") {
        ProofBuilder b(VarMode::Plain, 2, {}, x(1));
        const LineId id = prove_gap(b, P("x1 + x2"), 1);
        CHECK(b.poly(id) == P("x1 + x2") * (P("x1 + x2") - Poly::one()));
        check_builder(b);
    }
    SUBCASE("negative coefficients and thresholds") {
        ProofBuilder b(VarMode::Plain, 2, {}, x(1));
        const Poly l = P("2*x1 - 3*x2");
        const LineId id = prove_gap(b, l, -2);
        CHECK(b.poly(id) == gap_poly(l, Rational(-2)));
        check_builder(b);
    }
    SUBCASE("every emitted line has degree at most 3") {
        ProofBuilder b(VarMode::Plain, 2, {}, x(1));
        prove_gap(b, P("x1 + 2*x2 + x3 + 3*x4"), 3);
        const Proof proof = b.proof();
        check(proof);
        for (const auto& line : proof.lines) CHECK(line.poly.degree() <= 3);
        REQUIRE(b.gap_ranges().size() == 1);
        CHECK(b.gap_ranges()[0].second - b.gap_ranges()[0].first == proof.lines.size());
    }
    SUBCASE("rejects fractional or affine forms") {
        ProofBuilder b(VarMode::Plain, 2, {}, x(1));
        CHECK_THROWS_AS(prove_gap(b, P("1/2*x1"), 0), BuildError);
        CHECK_THROWS_AS(prove_gap(b, P("x1 + 1"), 0), BuildError);
        CHECK_THROWS_AS(prove_gap(b, P("x1^2"), 0), BuildError);
    }
    SUBCASE("memoization shares prefix work") {
        ProofBuilder b(VarMode::Plain, 2, {}, x(1));
        GapProver prover(b, {{x(1), 1}, {x(2), 1}});
        const LineId first = prover.prove(1);
        const std::size_t lines_after_first = b.line_count();
        CHECK(prover.prove(1) == first);
        CHECK(b.line_count() == lines_after_first);
        prover.prove(2);  // shares the prefix table
        check_builder(b);
    }
}

TEST_CASE("gap statements carry their expansion") {
    const auto g = GapStatement::make(P("x1 + x2"), Rational(1));
    CHECK(g.expanded == P("x1 + x2") * (P("x1 + x2") - Poly::one()));
    CHECK(g.expanded == gap_poly(g.linear_form, g.threshold));
    CHECK_THROWS_AS(GapStatement::make(P("x1^2"), Rational(0)), BuildError);
}

TEST_CASE("gap step identity, fuzzed") {
    // D_c(L + a*x) = x * D_{c-a}(L) + (1 - x) * D_c(L) + a^2 (x^2 - x).
    std::mt19937_64 rng(8080);
    std::uniform_int_distribution<long long> coeff(-6, 6);
    for (int iter = 0; iter < 50; ++iter) {
        const long long a = coeff(rng), c = coeff(rng);
        const Poly l = scale(P("x1"), Rational(coeff(rng))) + scale(P("x2"), Rational(coeff(rng)));
        const Poly xv = P("x3");
        const Poly lhs = gap_poly(l + scale(xv, Rational(a)), Rational(c));
        const Poly rhs = xv * gap_poly(l, Rational(c - a)) +
                         (Poly::one() - xv) * gap_poly(l, Rational(c)) +
                         scale(xv * xv - xv, Rational(a) * Rational(a));
        CHECK(lhs == rhs);
    }
}
