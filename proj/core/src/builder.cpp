#include "semialg/builder.hpp"

#include "semialg/errors.hpp"

namespace semialg {

ProofBuilder::ProofBuilder(VarMode mode, std::uint64_t p, std::vector<Poly> hypotheses,
                           VarId anchor)
    : anchor_(anchor) {
    proof_.mode = mode;
    proof_.p = p;
    proof_.hypotheses = std::move(hypotheses);
    if (anchor.is_indicator() != (mode == VarMode::Indicator)) {
        throw BuildError(BuildError::Kind::Precondition, "anchor variable has the wrong flavor");
    }
}

LineId ProofBuilder::append(Poly poly, Justification just) {
    const LineId id = proof_.lines.size();
    proof_.lines.push_back({id, std::move(poly), std::move(just)});
    return id;
}

LineId ProofBuilder::axiom(AxiomKind kind, VarId v) {
    const Poly x = Poly::variable(v);
    Poly poly;
    switch (kind) {
        case AxiomKind::NonNeg: poly = x; break;
        case AxiomKind::ComplNonNeg: poly = Poly::one() - x; break;
        case AxiomKind::BoolUp: poly = x * x - x; break;
        case AxiomKind::BoolDown: poly = x - x * x; break;
    }
    return append(std::move(poly), AxiomJust{kind, v});
}

LineId ProofBuilder::hyp(std::size_t index) {
    if (index >= proof_.hypotheses.size()) {
        throw BuildError(BuildError::Kind::Precondition, "hypothesis index out of range");
    }
    return append(proof_.hypotheses[index], HypJust{index});
}

LineId ProofBuilder::lin_comb(LineId i, const Rational& a, LineId j, const Rational& b) {
    if (a.sign() < 0 || b.sign() < 0) {
        throw BuildError(BuildError::Kind::Precondition,
                         "negative scalar in positive linear combination");
    }
    Poly combined = scale(poly(i), a) + scale(poly(j), b);
    return append(std::move(combined), LinCombJust{i, a, j, b});
}

LineId ProofBuilder::mult_var(LineId i, VarId v) {
    return append(mul_var(poly(i), v, false), MultVarJust{i, v});
}

LineId ProofBuilder::mult_compl(LineId i, VarId v) {
    return append(mul_var(poly(i), v, true), MultComplJust{i, v});
}

LineId ProofBuilder::scale_line(LineId i, const Rational& c) {
    return lin_comb(i, c, i, Rational(0));
}

LineId ProofBuilder::sum_lines(const std::vector<LineId>& ids) {
    if (ids.empty()) {
        throw BuildError(BuildError::Kind::Precondition, "empty sum");
    }
    LineId acc = ids[0];
    for (std::size_t k = 1; k < ids.size(); ++k) acc = add_lines(acc, ids[k]);
    return acc;
}

LineId ProofBuilder::const_nonneg(const Rational& k) {
    if (k.sign() < 0) {
        throw BuildError(BuildError::Kind::NegativeConstant,
                         "cannot derive a negative constant");
    }
    const LineId pos = axiom(AxiomKind::NonNeg, anchor_);
    const LineId compl_line = axiom(AxiomKind::ComplNonNeg, anchor_);
    return lin_comb(pos, k, compl_line, k);  // k*v + k*(1 - v) = k
}

EqProof ProofBuilder::eq_from_lines(LineId fwd, LineId bwd) {
    if (!(poly(fwd) == -poly(bwd))) {
        throw BuildError(BuildError::Kind::Precondition,
                         "equation halves are not exact negations");
    }
    return {fwd, bwd};
}

EqProof ProofBuilder::eq_zero() {
    return {const_nonneg(Rational(0)), const_nonneg(Rational(0))};
}

EqProof ProofBuilder::eq_of_hyps(std::size_t fwd_index, std::size_t bwd_index) {
    return eq_from_lines(hyp(fwd_index), hyp(bwd_index));
}

EqProof ProofBuilder::eq_of_bool(VarId v) {
    return {axiom(AxiomKind::BoolUp, v), axiom(AxiomKind::BoolDown, v)};
}

EqProof ProofBuilder::eq_scaled(EqProof e, const Rational& c) {
    if (c.is_zero()) return eq_zero();
    if (c.is_one()) return e;
    if (c.sign() > 0) return {scale_line(e.fwd, c), scale_line(e.bwd, c)};
    const Rational a = c.abs();
    if (a.is_one()) return eq_negate(e);
    return {scale_line(e.bwd, a), scale_line(e.fwd, a)};
}

EqProof ProofBuilder::eq_add(EqProof e1, EqProof e2) {
    return {add_lines(e1.fwd, e2.fwd), add_lines(e1.bwd, e2.bwd)};
}

void ProofBuilder::gap_range_end() {
    if (proof_.lines.size() > gap_open_) {
        gap_ranges_.emplace_back(gap_open_, proof_.lines.size());
    }
}

}  // namespace semialg
