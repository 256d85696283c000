#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "semialg/proof.hpp"

namespace semialg {

using LineId = std::size_t;

// A derived polynomial equation A = 0, represented as the pair of accepted
// lines asserting A >= 0 (fwd) and -A >= 0 (bwd).
struct EqProof {
    LineId fwd;
    LineId bwd;
};

// Appends lines to a proof under construction (single writer). Every append
// computes the line's polynomial from the rule semantics, so builder output
// is accepted by construction; the kernel checker still re-verifies
// independently.
class ProofBuilder {
  public:
    ProofBuilder(VarMode mode, std::uint64_t p, std::vector<Poly> hypotheses, VarId anchor);

    VarMode mode() const noexcept { return proof_.mode; }
    std::uint64_t field() const noexcept { return proof_.p; }
    VarId anchor() const noexcept { return anchor_; }
    std::size_t line_count() const noexcept { return proof_.lines.size(); }
    const Poly& poly(LineId id) const { return proof_.lines.at(id).poly; }
    const std::vector<Poly>& hypotheses() const noexcept { return proof_.hypotheses; }

    LineId axiom(AxiomKind kind, VarId v);
    LineId hyp(std::size_t index);
    LineId lin_comb(LineId i, const Rational& a, LineId j, const Rational& b);
    LineId mult_var(LineId i, VarId v);
    LineId mult_compl(LineId i, VarId v);

    // c * line, c >= 0 (a positive combination with the zero-weighted twin).
    LineId scale_line(LineId i, const Rational& c);
    LineId add_lines(LineId i, LineId j) { return lin_comb(i, 1, j, 1); }
    // Left fold with unit coefficients; throws on empty input.
    LineId sum_lines(const std::vector<LineId>& ids);

    // Derives the constant k >= 0 (k >= 0 required) as k*v + k*(1-v) over the
    // anchor variable.
    LineId const_nonneg(const Rational& k);

    // --- equation calculus -------------------------------------------------
    EqProof eq_from_lines(LineId fwd, LineId bwd);  // validates the two polys negate
    EqProof eq_zero();                              // 0 = 0
    EqProof eq_of_hyps(std::size_t fwd_index, std::size_t bwd_index);
    EqProof eq_of_bool(VarId v);  // v^2 - v = 0 from the two boolean axioms
    EqProof eq_negate(EqProof e) { return {e.bwd, e.fwd}; }
    EqProof eq_scaled(EqProof e, const Rational& c);  // c*A = 0, any sign
    EqProof eq_add(EqProof e1, EqProof e2);           // A1 + A2 = 0
    const Poly& eq_poly(EqProof e) const { return poly(e.fwd); }

    // Gap-derivation bookkeeping (see GapProver): line id ranges produced by
    // interval-gap derivations, for degree reporting.
    void gap_range_begin() { gap_open_ = proof_.lines.size(); }
    void gap_range_end();
    const std::vector<std::pair<LineId, LineId>>& gap_ranges() const noexcept {
        return gap_ranges_;
    }

    Proof take_proof() { return std::move(proof_); }
    const Proof& proof() const noexcept { return proof_; }

  private:
    LineId append(Poly poly, Justification just);

    Proof proof_;
    VarId anchor_;
    std::size_t gap_open_ = 0;
    std::vector<std::pair<LineId, LineId>> gap_ranges_;
};

}  // namespace semialg
