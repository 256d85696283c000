#include <algorithm>

#include "semialg/derivations.hpp"
#include "semialg/errors.hpp"

namespace semialg {

LineId prove_const_nonneg(ProofBuilder& b, const Rational& k) {
    return b.const_nonneg(k);
}

Poly gap_poly(const Poly& l, const Rational& c) {
    const Poly shifted = l - Poly::constant(c);
    return shifted * (shifted + Poly::one());
}

GapStatement GapStatement::make(Poly linear_form, Rational threshold) {
    if (linear_form.degree() > 1) {
        throw BuildError(BuildError::Kind::Precondition, "gap statement needs a linear form");
    }
    Poly expanded = gap_poly(linear_form, threshold);
    return {std::move(linear_form), std::move(threshold), std::move(expanded)};
}

GapProver::GapProver(ProofBuilder& b, std::vector<std::pair<VarId, long long>> form)
    : b_(b), form_(std::move(form)) {
    std::vector<Poly::Term> terms;
    auto& pool = MonoPool::instance();
    for (std::size_t i = 0; i < form_.size(); ++i) {
        if (form_[i].second == 0) {
            throw BuildError(BuildError::Kind::Precondition, "zero coefficient in gap form");
        }
        if (i > 0 && !(form_[i - 1].first < form_[i].first)) {
            throw BuildError(BuildError::Kind::Precondition, "gap form not in canonical order");
        }
        terms.push_back({pool.var(form_[i].first), Rational(form_[i].second)});
    }
    form_poly_ = Poly::from_terms(std::move(terms));
}

LineId GapProver::prove(long long c) {
    b_.gap_range_begin();
    const LineId id = derive(form_.size(), c);
    b_.gap_range_end();
    return id;
}

LineId GapProver::derive(std::size_t prefix, long long c) {
    const auto key = std::make_pair(prefix, c);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    LineId id;
    if (prefix == 0) {
        // D_c of the empty form is the constant c(c-1) >= 0.
        id = b_.const_nonneg(Rational(c) * Rational(c - 1));
    } else {
        const auto& [v, a] = form_[prefix - 1];
        const LineId shifted = derive(prefix - 1, c - a);
        const LineId same = derive(prefix - 1, c);
        const LineId lifted = b_.mult_var(shifted, v);
        const LineId complemented = b_.mult_compl(same, v);
        const LineId mixed = b_.add_lines(lifted, complemented);
        const LineId boolean = b_.axiom(AxiomKind::BoolUp, v);
        id = b_.lin_comb(mixed, Rational(1), boolean, Rational(a) * Rational(a));
    }
    memo_.emplace(key, id);
    return id;
}

LineId prove_gap(ProofBuilder& b, const Poly& l, long long c) {
    if (l.degree() > 1) {
        throw BuildError(BuildError::Kind::NonIntegerInput, "gap form must be linear");
    }
    std::vector<std::pair<VarId, long long>> form;
    for (const auto& t : l.terms()) {
        if (t.mono->is_constant()) {
            throw BuildError(BuildError::Kind::NonIntegerInput,
                             "gap form must have zero constant term");
        }
        if (!t.coeff.is_integer() || !t.coeff.fits_int64()) {
            throw BuildError(BuildError::Kind::NonIntegerInput,
                             "gap form coefficients must be integers");
        }
        form.emplace_back(t.mono->factors()[0].first, t.coeff.num_i64());
    }
    // Poly terms of a linear form are already in canonical variable order.
    GapProver prover(b, std::move(form));
    const LineId id = prover.prove(c);
    if (!(b.poly(id) == gap_poly(l, Rational(c)))) {
        throw BuildError(BuildError::Kind::Precondition, "gap derivation mismatch");
    }
    return id;
}

}  // namespace semialg
