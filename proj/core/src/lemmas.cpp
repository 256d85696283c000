#include <algorithm>
#include <unordered_map>

#include "semialg/derivations.hpp"
#include "semialg/errors.hpp"

namespace semialg {

EqProof prove_eq_mult(ProofBuilder& b, EqProof eq, const Poly& c) {
    if (c.is_zero()) return b.eq_zero();
    auto& pool = MonoPool::instance();
    // Lift chains for different terms share their common prefixes.
    std::unordered_map<const Mono*, EqProof> lifted;
    lifted.emplace(pool.constant(), eq);
    const auto lift_to = [&](const Mono* m) -> EqProof {
        EqProof cur = eq;
        const Mono* prefix = pool.constant();
        for (const auto& [v, e] : m->factors()) {
            for (std::uint32_t k = 0; k < e; ++k) {
                prefix = pool.mul_var(prefix, v);
                if (auto it = lifted.find(prefix); it != lifted.end()) {
                    cur = it->second;
                } else {
                    cur = {b.mult_var(cur.fwd, v), b.mult_var(cur.bwd, v)};
                    lifted.emplace(prefix, cur);
                }
            }
        }
        return cur;
    };
    bool have_acc = false;
    EqProof acc{};
    for (const auto& term : c.terms()) {
        EqProof piece = b.eq_scaled(lift_to(term.mono), term.coeff);
        acc = have_acc ? b.eq_add(acc, piece) : piece;
        have_acc = true;
    }
    return acc;
}

EqProof prove_ideal_rewrite(ProofBuilder& b, const Poly& p, const Poly& q,
                            const std::vector<std::pair<Poly, EqProof>>& decomposition) {
    Poly expected = p - q;
    for (const auto& [cof, eq] : decomposition) expected = expected - cof * b.eq_poly(eq);
    if (!expected.is_zero()) {
        throw BuildError(BuildError::Kind::DecompositionMismatch,
                         "P - Q does not match the supplied ideal decomposition");
    }
    EqProof acc = b.eq_zero();
    bool have_acc = false;
    for (const auto& [cof, eq] : decomposition) {
        const EqProof piece = prove_eq_mult(b, eq, cof);
        acc = have_acc ? b.eq_add(acc, piece) : piece;
        have_acc = true;
    }
    if (!have_acc) return acc;  // P == Q exactly
    return acc;
}

EqProof prove_ortho(ProofBuilder& b, const HypothesisBank& bank, std::uint32_t column,
                    std::uint32_t z, std::uint32_t l, std::uint64_t p) {
    if (z == l || z >= p || l >= p) {
        throw BuildError(BuildError::Kind::Precondition, "orthogonality needs distinct values");
    }
    const VarId vz = indicator_var(column, z);
    const VarId vl = indicator_var(column, l);

    // x(z) * (sum_l' x(l')) - x(z) = 0, from the indicator-sum axiom.
    const EqProof zeq = b.eq_of_hyps(bank.z_index(column, false), bank.z_index(column, true));
    const EqProof lifted = prove_eq_mult(b, zeq, Poly::variable(vz));
    // Subtract x(z)^2 - x(z) = 0 to leave the cross-term sum.
    const EqProof boolean = b.eq_of_bool(vz);
    const EqProof cross = b.eq_add(lifted, b.eq_negate(boolean));
    // cross: sum_{l' != z} x(z) x(l') = 0.

    // Upper bound: -x(z)x(l) = -cross + sum of the sibling products.
    LineId upper = cross.bwd;
    for (std::uint32_t s = 0; s < p; ++s) {
        if (s == z || s == l) continue;
        const LineId sib = b.mult_var(b.axiom(AxiomKind::NonNeg, vz), indicator_var(column, s));
        upper = b.add_lines(upper, sib);
    }
    // Lower bound: x(z)x(l) >= 0 by lifting the non-negativity axiom.
    const LineId lower = b.mult_var(b.axiom(AxiomKind::NonNeg, vz), vl);
    return b.eq_from_lines(lower, upper);
}

EqProof ortho_cached(ProofBuilder& b, const HypothesisBank& bank, OrthoCache& cache,
                     std::uint32_t column, std::uint32_t z, std::uint32_t l, std::uint64_t p) {
    const auto key = std::make_tuple(column, z, l);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const EqProof eq = prove_ortho(b, bank, column, z, l, p);
    cache.emplace(key, eq);
    return eq;
}

// ---------------------------------------------------------------------------
// Plain (F_2) regime
// ---------------------------------------------------------------------------

EqProof prove_partition_unity_f2(ProofBuilder& b, const std::vector<std::uint32_t>& columns) {
    Poly sum;
    for (std::uint32_t mask = 0; mask < (1u << columns.size()); ++mask) {
        sum = sum + ext_monomial_f2(columns, mask).expanded;
    }
    if (!(sum == Poly::one())) {
        throw BuildError(BuildError::Kind::Precondition, "extended monomials do not sum to 1");
    }
    return b.eq_zero();
}

EqProof prove_violated_monomial_f2(ProofBuilder& b, const HypothesisBank& bank,
                                   const LinSystemFp& sys, std::size_t row,
                                   std::uint32_t t_mask) {
    const auto support = sys.support(row);
    const std::uint32_t rhs = sys.rows()[row].rhs;
    const auto weight = static_cast<std::uint32_t>(__builtin_popcount(t_mask));
    if (weight % 2 == rhs % 2) {
        throw BuildError(BuildError::Kind::WrongParity,
                         "subset parity matches the row; nothing to refute");
    }
    const Poly m = ext_monomial_f2(support, t_mask).expanded;
    const Poly target = -m;

    std::vector<VarId> in_t, out_t;
    for (std::size_t k = 0; k < support.size(); ++k) {
        ((t_mask >> k) & 1 ? in_t : out_t).push_back(plain_var(support[k]));
    }

    // Downward direction: start at the row inequality and lift, cancelling
    // each boolean cross term as it appears. Stops as soon as the product
    // form is reached.
    LineId cur = b.hyp(bank.f2_index(row, t_mask));
    for (std::size_t r = 0; r < in_t.size() && !(b.poly(cur) == target); ++r) {
        cur = b.mult_var(cur, in_t[r]);
        LineId fix = b.axiom(AxiomKind::BoolUp, in_t[r]);
        for (std::size_t j = 0; j < r; ++j) fix = b.mult_var(fix, in_t[j]);
        cur = b.add_lines(cur, fix);
    }
    for (std::size_t s = 0; s < out_t.size() && !(b.poly(cur) == target); ++s) {
        cur = b.mult_compl(cur, out_t[s]);
        LineId fix = b.axiom(AxiomKind::BoolUp, out_t[s]);
        for (const VarId v : in_t) fix = b.mult_var(fix, v);
        for (std::size_t j = 0; j < s; ++j) fix = b.mult_compl(fix, out_t[j]);
        cur = b.add_lines(cur, fix);
    }
    if (!(b.poly(cur) == target)) {
        throw BuildError(BuildError::Kind::Precondition, "monomial refutation did not close");
    }

    // Upward direction: M^I_T >= 0 from the axioms alone.
    LineId nonneg;
    if (support.empty()) {
        nonneg = b.const_nonneg(Rational(1));
    } else if (!in_t.empty()) {
        nonneg = b.axiom(AxiomKind::NonNeg, in_t[0]);
        for (std::size_t r = 1; r < in_t.size(); ++r) nonneg = b.mult_var(nonneg, in_t[r]);
        for (const VarId v : out_t) nonneg = b.mult_compl(nonneg, v);
    } else {
        nonneg = b.axiom(AxiomKind::ComplNonNeg, out_t[0]);
        for (std::size_t s = 1; s < out_t.size(); ++s) nonneg = b.mult_compl(nonneg, out_t[s]);
    }
    return b.eq_from_lines(nonneg, cur);
}

namespace {

// x * M = target (target is M or 0) via the boolean ideal; the cofactors come
// straight from the multilinear reduction of x*M.
EqProof monomial_shift_eq(ProofBuilder& b, const Poly& m, VarId v, const Poly& target) {
    const Poly product = mul_var(m, v, false);
    MultilinearDecomp decomp = multilinear_cofactors(product);
    if (!(decomp.reduced == target)) {
        throw BuildError(BuildError::Kind::Precondition, "unexpected multilinear reduction");
    }
    std::vector<std::pair<Poly, EqProof>> parts;
    parts.reserve(decomp.cofactors.size());
    for (auto& [var, cof] : decomp.cofactors) {
        parts.emplace_back(std::move(cof), b.eq_of_bool(var));
    }
    return prove_ideal_rewrite(b, product, target, parts);
}

}  // namespace

EqProof prove_weight_identity_f2(ProofBuilder& b, const std::vector<std::uint32_t>& columns,
                                 std::uint32_t t_mask) {
    const Poly m = ext_monomial_f2(columns, t_mask).expanded;
    EqProof acc = b.eq_zero();
    bool have_acc = false;
    for (std::size_t k = 0; k < columns.size(); ++k) {
        const VarId v = plain_var(columns[k]);
        const bool member = (t_mask >> k) & 1;
        const EqProof piece = monomial_shift_eq(b, m, v, member ? m : Poly());
        acc = have_acc ? b.eq_add(acc, piece) : piece;
        have_acc = true;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Indicator (F_p) regime
// ---------------------------------------------------------------------------

EqProof prove_partition_unity_fp(ProofBuilder& b, const HypothesisBank& bank,
                                 const std::vector<std::uint32_t>& columns, std::uint64_t p,
                                 OrthoCache& ortho) {
    // Stage 1: prod_{i in I} (sum_l x_i(l)) = 1, by induction on the product.
    EqProof acc = b.eq_zero();
    Poly partial = Poly::one();
    for (const std::uint32_t col : columns) {
        const EqProof zeq = b.eq_of_hyps(bank.z_index(col, false), bank.z_index(col, true));
        const EqProof step = prove_eq_mult(b, zeq, partial);
        acc = b.eq_add(acc, step);  // partial - 1 = 0 plus partial*(sum) - partial = 0
        Poly sum;
        for (std::uint32_t l = 0; l < p; ++l) {
            sum = sum + Poly::variable(indicator_var(col, l));
        }
        partial = partial * sum;
    }
    // The expanded product is exactly sum_z prod_i x_i(z_i).

    // Stage 2: rewrite each bare product to its extended monomial.
    std::vector<std::uint32_t> coeffs(columns.size(), 1);
    for (const auto& vec : enumerate_vectors(coeffs, 0, p)) {
        Poly bare = Poly::one();
        for (std::size_t k = 0; k < columns.size(); ++k) {
            bare = mul_var(bare, indicator_var(columns[k], vec.z[k]), false);
        }
        const Poly m = ext_monomial_fp(columns, vec.z, p).expanded;
        // M_z - N_z lies in the ideal of the orthogonality products.
        Poly rest = m - bare;
        std::vector<std::pair<Poly, EqProof>> parts;
        for (std::size_t k = 0; k < columns.size() && !rest.is_zero(); ++k) {
            const VarId vz = indicator_var(columns[k], vec.z[k]);
            for (std::uint32_t l = 0; l < p && !rest.is_zero(); ++l) {
                if (l == vec.z[k]) continue;
                const VarId vl = indicator_var(columns[k], l);
                std::vector<Poly::Term> quotient, remainder;
                for (const auto& term : rest.terms()) {
                    if (term.mono->contains(vz) && term.mono->contains(vl)) {
                        const Mono* q = MonoPool::instance().div_var(
                            MonoPool::instance().div_var(term.mono, vz), vl);
                        quotient.push_back({q, term.coeff});
                    } else {
                        remainder.push_back({term.mono, term.coeff});
                    }
                }
                if (quotient.empty()) continue;
                parts.emplace_back(Poly::from_terms(std::move(quotient)),
                                   ortho_cached(b, bank, ortho, columns[k], vec.z[k], l, p));
                rest = Poly::from_terms(std::move(remainder));
            }
        }
        const EqProof meq = prove_ideal_rewrite(b, m, bare, parts);
        acc = b.eq_add(acc, meq);  // replace N_z by M_z inside the running sum
    }
    return acc;
}

EqProof prove_violated_monomial_fp(ProofBuilder& b, const HypothesisBank& bank,
                                   const LinSystemFp& sys, std::size_t row,
                                   const VectorInfo& vec) {
    if (vec.satisfying) {
        throw BuildError(BuildError::Kind::NotViolating, "z satisfies the row");
    }
    const auto support = sys.support(row);
    const std::uint64_t p = sys.p();
    const Poly m = ext_monomial_fp(support, vec.z, p).expanded;

    std::vector<VarId> picked;
    picked.reserve(support.size());
    for (std::size_t k = 0; k < support.size(); ++k) {
        picked.push_back(indicator_var(support[k], vec.z[k]));
    }
    Poly bare = Poly::one();
    for (const VarId v : picked) bare = mul_var(bare, v, false);
    const Poly bare_target = -bare;

    // Phase 1: 0 >= prod_i x_i(z_i), lifting the row inequality.
    LineId cur = b.hyp(bank.fp_index(row, vec.code));
    for (std::size_t r = 0; r < picked.size() && !(b.poly(cur) == bare_target); ++r) {
        cur = b.mult_var(cur, picked[r]);
        LineId fix = b.axiom(AxiomKind::BoolUp, picked[r]);
        for (std::size_t j = 0; j < r; ++j) fix = b.mult_var(fix, picked[j]);
        cur = b.add_lines(cur, fix);
    }
    if (!(b.poly(cur) == bare_target)) {
        throw BuildError(BuildError::Kind::Precondition, "indicator refutation did not close");
    }
    // Phase 2: multiply through all complements to reach -M_z.
    for (std::size_t k = 0; k < support.size(); ++k) {
        for (std::uint32_t l = 0; l < p; ++l) {
            if (l == vec.z[k]) continue;
            cur = b.mult_compl(cur, indicator_var(support[k], l));
        }
    }
    if (!(b.poly(cur) == -m)) {
        throw BuildError(BuildError::Kind::Precondition, "complement lifting did not close");
    }

    // Upward direction from the axioms alone.
    LineId nonneg;
    if (support.empty()) {
        nonneg = b.const_nonneg(Rational(1));
    } else {
        nonneg = b.axiom(AxiomKind::NonNeg, picked[0]);
        for (std::size_t r = 1; r < picked.size(); ++r) nonneg = b.mult_var(nonneg, picked[r]);
        for (std::size_t k = 0; k < support.size(); ++k) {
            for (std::uint32_t l = 0; l < p; ++l) {
                if (l == vec.z[k]) continue;
                nonneg = b.mult_compl(nonneg, indicator_var(support[k], l));
            }
        }
    }
    return b.eq_from_lines(nonneg, cur);
}

EqProof prove_weight_identity_fp(ProofBuilder& b, const std::vector<std::uint32_t>& columns,
                                 const std::vector<std::uint32_t>& coeffs,
                                 const std::vector<std::uint32_t>& z, std::uint64_t p) {
    if (coeffs.size() != columns.size() || z.size() != columns.size()) {
        throw BuildError(BuildError::Kind::Precondition, "mismatched weight identity inputs");
    }
    const Poly m = ext_monomial_fp(columns, z, p).expanded;
    EqProof acc = b.eq_zero();
    bool have_acc = false;
    for (std::size_t k = 0; k < columns.size(); ++k) {
        for (std::uint32_t l = 1; l < p; ++l) {  // l = 0 contributes nothing
            const Rational weight = Rational(static_cast<long long>(coeffs[k])) *
                                    Rational(static_cast<long long>(l));
            if (weight.is_zero()) continue;
            const VarId v = indicator_var(columns[k], l);
            const bool keeps = l == z[k];
            EqProof piece = monomial_shift_eq(b, m, v, keeps ? m : Poly());
            piece = b.eq_scaled(piece, weight);
            acc = have_acc ? b.eq_add(acc, piece) : piece;
            have_acc = true;
        }
    }
    return acc;
}

}  // namespace semialg
