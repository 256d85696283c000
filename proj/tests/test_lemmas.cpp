#include <doctest.h>

#include "semialg/derivations.hpp"
#include "semialg/errors.hpp"

using namespace semialg;

namespace {

Poly P(const char* text) {
    return Poly::parse(text);
}

// Degree of the lines appended by one builder action.
struct DegreeSpan {
    ProofBuilder& b;
    std::size_t start;
    explicit DegreeSpan(ProofBuilder& builder) : b(builder), start(builder.line_count()) {}
    int max_degree() const {
        int deg = 0;
        for (std::size_t i = start; i < b.line_count(); ++i) {
            deg = std::max(deg, b.poly(i).degree());
        }
        return deg;
    }
};

}  // namespace

TEST_CASE("violated monomials, plain regime") {
    SUBCASE("width-2 row, empty subset") {
        LinSystemFp sys(2, 2);
        sys.add_row({1, 1}, 1);
        const auto bank = HypothesisBank::for_f2(sys);
        ProofBuilder b(VarMode::Plain, 2, bank.polys(), plain_var(0));
        const EqProof eq = prove_violated_monomial_f2(b, bank, sys, 0, 0b00);
        CHECK(b.eq_poly(eq) == (Poly::one() - P("x1")) * (Poly::one() - P("x2")));
        check(b.proof());
    }
    SUBCASE("forced-zero variable") {
        LinSystemFp sys(2, 1);
        sys.add_row({1}, 0);
        const auto bank = HypothesisBank::for_f2(sys);
        ProofBuilder b(VarMode::Plain, 2, bank.polys(), plain_var(0));
        const EqProof eq = prove_violated_monomial_f2(b, bank, sys, 0, 0b1);
        CHECK(b.eq_poly(eq) == P("x1"));
        check(b.proof());
    }
    SUBCASE("width-3 row stays within degree |I|") {
        LinSystemFp sys(2, 3);
        sys.add_row({1, 1, 1}, 0);
        const auto bank = HypothesisBank::for_f2(sys);
        ProofBuilder b(VarMode::Plain, 2, bank.polys(), plain_var(0));
        const DegreeSpan span(b);
        prove_violated_monomial_f2(b, bank, sys, 0, 0b001);
        CHECK(span.max_degree() <= 3);
        check(b.proof());
    }
    SUBCASE("matching parity is refused") {
        LinSystemFp sys(2, 2);
        sys.add_row({1, 1}, 1);
        const auto bank = HypothesisBank::for_f2(sys);
        ProofBuilder b(VarMode::Plain, 2, bank.polys(), plain_var(0));
        CHECK_THROWS_AS(prove_violated_monomial_f2(b, bank, sys, 0, 0b01), BuildError);
    }
}

TEST_CASE("weight identities, plain regime") {
    ProofBuilder b(VarMode::Plain, 2, {}, plain_var(0));
    SUBCASE("T = I = {1}") {
        const EqProof eq = prove_weight_identity_f2(b, {0}, 0b1);
        CHECK(b.eq_poly(eq) == (P("x1") - Poly::one()) * P("x1"));
        check(b.proof());
    }
    SUBCASE("I = {1,2}, T = {1}") {
        const EqProof eq = prove_weight_identity_f2(b, {0, 1}, 0b01);
        CHECK(b.eq_poly(eq) == (P("x1 + x2") - Poly::one()) * P("x1 - x1*x2"));
        check(b.proof());
    }
    SUBCASE("T empty") {
        const EqProof eq = prove_weight_identity_f2(b, {0}, 0b0);
        CHECK(b.eq_poly(eq) == P("x1") * (Poly::one() - P("x1")));
        check(b.proof());
    }
    SUBCASE("degree bound |I| + 1") {
        for (std::uint32_t mask = 0; mask < 16; ++mask) {
            const DegreeSpan span(b);
            prove_weight_identity_f2(b, {0, 1, 2, 3}, mask);
            CHECK(span.max_degree() <= 5);
        }
        check(b.proof());
    }
}

TEST_CASE("partition of unity, plain regime, is the trivial equality") {
    ProofBuilder b(VarMode::Plain, 2, {}, plain_var(0));
    const EqProof eq = prove_partition_unity_f2(b, {0, 1, 2});
    CHECK(b.eq_poly(eq) == Poly());
    check(b.proof());
}

TEST_CASE("violated monomials, indicator regime") {
    SUBCASE("p=3 singleton row") {
        LinSystemFp sys(3, 1);
        sys.add_row({1}, 2);
        const auto bank = HypothesisBank::for_fp(sys);
        ProofBuilder b(VarMode::Indicator, 3, bank.polys(), indicator_var(0, 0));
        const auto vectors = enumerate_vectors({1}, 2, 3);
        REQUIRE(vectors[0].z == std::vector<std::uint32_t>{0});
        const EqProof eq = prove_violated_monomial_fp(b, bank, sys, 0, vectors[0]);
        CHECK(b.eq_poly(eq) ==
              P("x1_0") * (Poly::one() - P("x1_1")) * (Poly::one() - P("x1_2")));
        check(b.proof());
    }
    SUBCASE("p=2 pair row") {
        LinSystemFp sys(2, 2);
        sys.add_row({1, 1}, 1);
        const auto bank = HypothesisBank::for_fp(sys);
        ProofBuilder b(VarMode::Indicator, 2, bank.polys(), indicator_var(0, 0));
        for (const auto& vec : enumerate_vectors({1, 1}, 1, 2)) {
            if (vec.satisfying) continue;
            const DegreeSpan span(b);
            const EqProof eq = prove_violated_monomial_fp(b, bank, sys, 0, vec);
            CHECK(b.eq_poly(eq) == ext_monomial_fp({0, 1}, vec.z, 2).expanded);
            CHECK(span.max_degree() <= 4);  // |I| * p
        }
        check(b.proof());
    }
    SUBCASE("satisfying z is refused") {
        LinSystemFp sys(3, 1);
        sys.add_row({1}, 2);
        const auto bank = HypothesisBank::for_fp(sys);
        ProofBuilder b(VarMode::Indicator, 3, bank.polys(), indicator_var(0, 0));
        const auto vectors = enumerate_vectors({1}, 2, 3);
        CHECK_THROWS_AS(prove_violated_monomial_fp(b, bank, sys, 0, vectors[2]), BuildError);
    }
}

TEST_CASE("weight identities, indicator regime") {
    ProofBuilder b(VarMode::Indicator, 3, {}, indicator_var(0, 0));
    SUBCASE("p=2 singleton") {
        ProofBuilder b2(VarMode::Indicator, 2, {}, indicator_var(0, 0));
        const EqProof eq = prove_weight_identity_fp(b2, {0}, {1}, {1}, 2);
        const Poly m = ext_monomial_fp({0}, {1}, 2).expanded;
        CHECK(b2.eq_poly(eq) == (P("x1_1") - Poly::one()) * m);
        check(b2.proof());
    }
    SUBCASE("p=3 coefficient 2, z = 0") {
        const EqProof eq = prove_weight_identity_fp(b, {0}, {2}, {0}, 3);
        const Poly m = ext_monomial_fp({0}, {0}, 3).expanded;
        const Poly x_form = scale(P("x1_1"), Rational(1)) + scale(P("x1_2"), Rational(2));
        CHECK(b.eq_poly(eq) == scale(x_form, Rational(2)) * m);
        check(b.proof());
    }
    SUBCASE("empty support") {
        const EqProof eq = prove_weight_identity_fp(b, {}, {}, {}, 3);
        CHECK(b.eq_poly(eq) == Poly());
        check(b.proof());
    }
    SUBCASE("degree bound |I|p + 1") {
        const DegreeSpan span(b);
        prove_weight_identity_fp(b, {0, 1}, {2, 1}, {1, 2}, 3);
        CHECK(span.max_degree() <= 7);
        check(b.proof());
    }
}

TEST_CASE("partition of unity, indicator regime") {
    SUBCASE("p=2 singleton support") {
        LinSystemFp sys(2, 1);
        const auto bank = HypothesisBank::for_fp(sys);
        ProofBuilder b(VarMode::Indicator, 2, bank.polys(), indicator_var(0, 0));
        OrthoCache ortho;
        const EqProof eq = prove_partition_unity_fp(b, bank, {0}, 2, ortho);
        const Poly sum = ext_monomial_fp({0}, {0}, 2).expanded +
                         ext_monomial_fp({0}, {1}, 2).expanded;
        CHECK(b.eq_poly(eq) == sum - Poly::one());
        const Proof proof = b.take_proof();
        check(proof);
        const auto probe =
            soundness_probe(proof, {indicator_var(0, 0), indicator_var(0, 1)});
        CHECK(probe.ok());
        CHECK(probe.hypothesis_satisfying == 2);  // the two indicator points
    }
    SUBCASE("empty support") {
        LinSystemFp sys(3, 1);
        const auto bank = HypothesisBank::for_fp(sys);
        ProofBuilder b(VarMode::Indicator, 3, bank.polys(), indicator_var(0, 0));
        OrthoCache ortho;
        const EqProof eq = prove_partition_unity_fp(b, bank, {}, 3, ortho);
        CHECK(b.eq_poly(eq) == Poly());
        check(b.proof());
    }
    SUBCASE("p=3 two columns") {
        LinSystemFp sys(3, 2);
        const auto bank = HypothesisBank::for_fp(sys);
        ProofBuilder b(VarMode::Indicator, 3, bank.polys(), indicator_var(0, 0));
        OrthoCache ortho;
        const EqProof eq = prove_partition_unity_fp(b, bank, {0, 1}, 3, ortho);
        Poly sum;
        for (const auto& vec : enumerate_vectors({1, 1}, 0, 3)) {
            sum = sum + ext_monomial_fp({0, 1}, vec.z, 3).expanded;
        }
        CHECK(b.eq_poly(eq) == sum - Poly::one());
        check(b.proof());
    }
}
