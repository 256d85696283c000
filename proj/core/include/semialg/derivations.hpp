#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "semialg/builder.hpp"
#include "semialg/encoder.hpp"
#include "semialg/linsystem.hpp"

namespace semialg {

// ---------------------------------------------------------------------------
// Generic derivation helpers
// ---------------------------------------------------------------------------

// The constant k >= 0 as an accepted line (k must be >= 0).
LineId prove_const_nonneg(ProofBuilder& b, const Rational& k);

// From A = 0 derive C*A = 0: per term c*m of C (canonical order), lift both
// directions through the variables of m, scale by |c| (direction chosen by
// the sign), then chain the pieces with positive combinations.
EqProof prove_eq_mult(ProofBuilder& b, EqProof eq, const Poly& c);

// From the exact identity P - Q = sum_k C_k * A_k (checked; throws
// BuildError(DecompositionMismatch) otherwise) derive P = Q.
EqProof prove_ideal_rewrite(ProofBuilder& b, const Poly& p, const Poly& q,
                            const std::vector<std::pair<Poly, EqProof>>& decomposition);

// Orthogonality of two indicators of the same variable: x_i(z) * x_i(l) = 0
// for z != l, from the indicator-sum axiom and the boolean axioms.
EqProof prove_ortho(ProofBuilder& b, const HypothesisBank& bank, std::uint32_t column,
                    std::uint32_t z, std::uint32_t l, std::uint64_t p);

// ---------------------------------------------------------------------------
// Interval-gap derivations: D_c(L) = (L - c)(L - c + 1) >= 0
// ---------------------------------------------------------------------------

// Dynamic program over the prefixes of a fixed integer-coefficient linear
// form with zero constant term: base D_c(0) = c(c-1) >= 0, step
//   D_c(L' + a*x) = x*D_{c-a}(L') + (1-x)*D_c(L') + a^2*(x^2 - x).
// Memoized over (prefix, threshold), so repeated thresholds share lines.
// Every emitted line has degree <= 3.
class GapProver {
  public:
    // Form entries in canonical variable order, all coefficients nonzero.
    GapProver(ProofBuilder& b, std::vector<std::pair<VarId, long long>> form);

    LineId prove(long long c);

    const Poly& form_poly() const noexcept { return form_poly_; }

  private:
    LineId derive(std::size_t prefix, long long c);

    ProofBuilder& b_;
    std::vector<std::pair<VarId, long long>> form_;
    Poly form_poly_;
    std::map<std::pair<std::size_t, long long>, LineId> memo_;
};

// One-shot convenience: L must be linear with integer coefficients and zero
// constant term (BuildError(NonIntegerInput) otherwise).
LineId prove_gap(ProofBuilder& b, const Poly& l, long long c);

// The quadratic (L - c)(L - c + 1).
Poly gap_poly(const Poly& l, const Rational& c);

// The pair (L, c), which names the inequality D_c(L) >= 0: the assertion
// that L never falls strictly between c - 1 and c.
struct GapStatement {
    Poly linear_form;
    Rational threshold;
    Poly expanded;  // (L - c)(L - c + 1), kept in sync by make()

    static GapStatement make(Poly linear_form, Rational threshold);
};

// ---------------------------------------------------------------------------
// Extended-monomial lemmas, plain (F_2) regime
// ---------------------------------------------------------------------------

// sum_{T subseteq I} M^I_T = 1 holds as an exact polynomial identity; the
// returned equation is the trivial constant equality.
EqProof prove_partition_unity_f2(ProofBuilder& b, const std::vector<std::uint32_t>& columns);

// M^I_T = 0 for a subset of the wrong parity (|T| = 1 - b mod 2), derived
// from the matching row inequality by lifting through T then through the
// complements, cancelling boolean cross terms as they appear.
EqProof prove_violated_monomial_f2(ProofBuilder& b, const HypothesisBank& bank,
                                   const LinSystemFp& sys, std::size_t row,
                                   std::uint32_t t_mask);

// (sum_{i in I} x_i - |T|) * M^I_T = 0.
EqProof prove_weight_identity_f2(ProofBuilder& b, const std::vector<std::uint32_t>& columns,
                                 std::uint32_t t_mask);

// ---------------------------------------------------------------------------
// Extended-monomial lemmas, indicator (F_p) regime
// ---------------------------------------------------------------------------

// Cache of orthogonality equations, shared across one construction.
using OrthoCache = std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, EqProof>;

EqProof ortho_cached(ProofBuilder& b, const HypothesisBank& bank, OrthoCache& cache,
                     std::uint32_t column, std::uint32_t z, std::uint32_t l, std::uint64_t p);

// sum_{z in F_p^I} M_z = 1, from the indicator-sum axioms: the product
// prod_i (sum_l x_i(l)) = 1 is built inductively, its expansion is exactly
// sum_z prod_i x_i(z_i), and each bare product rewrites to M_z through
// orthogonality equations.
EqProof prove_partition_unity_fp(ProofBuilder& b, const HypothesisBank& bank,
                                 const std::vector<std::uint32_t>& columns, std::uint64_t p,
                                 OrthoCache& ortho);

// M_z = 0 for a violating z, from the matching row inequality.
EqProof prove_violated_monomial_fp(ProofBuilder& b, const HypothesisBank& bank,
                                   const LinSystemFp& sys, std::size_t row,
                                   const VectorInfo& vec);

// (sum_i a_i X_i - sum_i a_i z_i) * M_z = 0 with X_i = sum_l l*x_i(l).
EqProof prove_weight_identity_fp(ProofBuilder& b, const std::vector<std::uint32_t>& columns,
                                 const std::vector<std::uint32_t>& coeffs,
                                 const std::vector<std::uint32_t>& z, std::uint64_t p);

// ---------------------------------------------------------------------------
// Refutation pipelines
// ---------------------------------------------------------------------------

struct RefutationReport {
    Proof proof;
    Rational endgame_constant;  // value of D_{q+1}(L_0) before the final scaling
    // Thresholds derived per level 0..|J| (ascending within a level).
    std::vector<std::vector<long long>> thresholds;
    // Line id ranges of interval-gap derivations plus their max degree.
    std::vector<std::pair<LineId, LineId>> gap_ranges;
    int gap_max_degree = 0;
};

// Compiles a refutation of an unsatisfiable F_2 system from its certificate.
// Hypotheses are the plain-mode row inequalities of every row.
RefutationReport refute_f2(const LinSystemFp& sys, const Certificate& cert);

// Compiles a refutation over the indicator encoding for any prime field.
// Hypotheses are the indicator-mode row inequalities plus the Z axioms.
RefutationReport refute_fp(const LinSystemFp& sys, const Certificate& cert);

}  // namespace semialg
