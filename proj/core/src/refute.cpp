#include <algorithm>
#include <map>
#include <set>

#include "semialg/derivations.hpp"
#include "semialg/errors.hpp"

namespace semialg {

namespace {

using Kind = BuildError::Kind;

// Converts an integer-coefficient linear form into the gap-prover shape;
// throws when a coefficient is fractional or a constant term survives.
std::vector<std::pair<VarId, long long>> gap_form(const Poly& l) {
    std::vector<std::pair<VarId, long long>> form;
    for (const auto& t : l.terms()) {
        if (t.mono->is_constant()) {
            throw BuildError(Kind::NonIntegerInput, "level form has a constant term");
        }
        if (!t.coeff.is_integer() || !t.coeff.fits_int64()) {
            throw BuildError(Kind::NonIntegerInput, "level form has a fractional coefficient");
        }
        form.emplace_back(t.mono->factors()[0].first, t.coeff.num_i64());
    }
    // Degree-1 terms of a canonical Poly are already in variable-name order.
    return form;
}

void assert_thresholds_in_range(const std::vector<std::set<long long>>& plan,
                                unsigned long long per_level) {
    for (std::size_t k = 0; k < plan.size(); ++k) {
        for (const long long c : plan[k]) {
            if (c < 0 || static_cast<unsigned long long>(c) > per_level * (k + 1)) {
                throw BuildError(Kind::Precondition, "threshold escapes the planned range");
            }
        }
    }
}

std::vector<std::vector<long long>> to_sorted(const std::vector<std::set<long long>>& plan) {
    std::vector<std::vector<long long>> out;
    out.reserve(plan.size());
    for (const auto& s : plan) out.emplace_back(s.begin(), s.end());
    return out;
}

int max_degree_in_ranges(const Proof& proof,
                         const std::vector<std::pair<LineId, LineId>>& ranges) {
    int deg = 0;
    for (const auto& [lo, hi] : ranges) {
        for (LineId id = lo; id < hi; ++id) {
            deg = std::max(deg, proof.lines[id].poly.degree());
        }
    }
    return deg;
}

}  // namespace

RefutationReport refute_f2(const LinSystemFp& sys, const Certificate& cert) {
    if (sys.p() != 2) {
        throw BuildError(Kind::InvalidCertificate, "plain pipeline requires field 2");
    }
    if (!certificate_valid(sys, cert)) {
        throw BuildError(Kind::InvalidCertificate, "certificate identities fail");
    }
    if (sys.var_count() == 0) {
        throw BuildError(Kind::NoVariables, "need at least one variable");
    }

    const HypothesisBank bank = HypothesisBank::for_f2(sys);
    ProofBuilder b(VarMode::Plain, 2, bank.polys(), plain_var(0));
    const auto& certificate_rows = cert.rows;
    const std::size_t levels = certificate_rows.size();

    // Level forms L_k = (1/2)(sum_{idx < k} a_idx . x + sum_{idx >= k} b_idx).
    std::vector<Poly> level;
    level.reserve(levels + 1);
    {
        std::vector<Rational> col(sys.var_count(), Rational(0));
        Rational rhs(0);
        for (const std::size_t j : certificate_rows) rhs += Rational(sys.rows()[j].rhs);
        const Rational half(1, 2);
        for (std::size_t k = 0; k <= levels; ++k) {
            if (k > 0) {
                const auto& row = sys.rows()[certificate_rows[k - 1]];
                for (std::uint32_t i = 0; i < sys.var_count(); ++i) {
                    col[i] += Rational(row.coeffs[i]);
                }
                rhs -= Rational(row.rhs);
            }
            std::vector<Poly::Term> terms;
            auto& pool = MonoPool::instance();
            for (std::uint32_t i = 0; i < sys.var_count(); ++i) {
                if (!col[i].is_zero()) terms.push_back({pool.var(plain_var(i)), col[i] * half});
            }
            if (!rhs.is_zero()) terms.push_back({pool.constant(), rhs * half});
            level.push_back(Poly::from_terms(std::move(terms)));
        }
    }

    // Sum of certificate right-hand sides is odd: 2q + 1.
    long long rhs_sum = 0;
    for (const std::size_t j : certificate_rows) rhs_sum += sys.rows()[j].rhs;
    const long long q = (rhs_sum - 1) / 2;

    // Backward-closure threshold plan from the endgame threshold q + 1.
    std::vector<std::set<long long>> plan(levels + 1);
    plan[0] = {q + 1};
    for (std::size_t k = 0; k < levels; ++k) {
        const std::size_t row = certificate_rows[k];
        const auto support = sys.support(row);
        const long long row_rhs = sys.rows()[row].rhs;
        std::set<long long> tvals;
        for (const auto& sub :
             enumerate_subsets(static_cast<std::uint32_t>(support.size()), sys.rows()[row].rhs)) {
            if (sub.satisfying) tvals.insert(sub.weight);
        }
        for (const long long c : plan[k]) {
            for (const long long t : tvals) plan[k + 1].insert(c + (t - row_rhs) / 2);
        }
    }
    assert_thresholds_in_range(plan, sys.var_count());

    // Base level: D_c of the integer form, for every planned threshold.
    GapProver gap(b, gap_form(level[levels]));
    std::map<std::pair<std::size_t, long long>, LineId> memo;
    for (const long long c : plan[levels]) memo[{levels, c}] = gap.prove(c);

    const Rational half(1, 2);
    for (std::size_t down = 0; down < levels; ++down) {
        const std::size_t k = levels - 1 - down;
        const std::size_t row = certificate_rows[k];
        const auto support = sys.support(row);
        const long long row_rhs = sys.rows()[row].rhs;
        const Poly& lk = level[k];
        const Poly& lk1 = level[k + 1];
        const auto subsets =
            enumerate_subsets(static_cast<std::uint32_t>(support.size()), sys.rows()[row].rhs);

        // Per-subset equations, shared by every threshold of this level.
        std::map<std::uint32_t, EqProof> weight_eq;
        for (const auto& sub : subsets) {
            if (sub.satisfying) {
                weight_eq.emplace(sub.mask, prove_weight_identity_f2(b, support, sub.mask));
            }
        }
        // Partition identity minus the violated monomials:
        // sum_{satisfying T} M^I_T - 1 = 0.
        EqProof e_sat = prove_partition_unity_f2(b, support);
        for (const auto& sub : subsets) {
            if (sub.satisfying) continue;
            const EqProof kill = prove_violated_monomial_f2(b, bank, sys, row, sub.mask);
            e_sat = b.eq_add(e_sat, b.eq_negate(kill));
        }
        // Multiples by the level form, for the threshold-specific closes.
        const EqProof e_l = prove_eq_mult(b, e_sat, lk);
        const EqProof e_ll = prove_eq_mult(b, e_l, lk);

        for (const long long c : plan[k]) {
            std::vector<LineId> pieces;
            for (const auto& sub : subsets) {
                if (!sub.satisfying) continue;
                const long long d = c + (static_cast<long long>(sub.weight) - row_rhs) / 2;
                LineId cur = memo.at({k + 1, d});
                for (std::size_t i = 0; i < support.size(); ++i) {
                    if ((sub.mask >> i) & 1) cur = b.mult_var(cur, plain_var(support[i]));
                }
                for (std::size_t i = 0; i < support.size(); ++i) {
                    if (!((sub.mask >> i) & 1)) cur = b.mult_compl(cur, plain_var(support[i]));
                }
                // Swap the first factor: subtract (1/2)(L_{k+1} - d + 1) * A.
                const Poly c1 = scale(lk1 + Poly::constant(Rational(1 - d)), half);
                const EqProof eq_b = prove_eq_mult(b, weight_eq.at(sub.mask), c1);
                cur = b.add_lines(cur, eq_b.bwd);
                // Swap the second factor: subtract (1/2)(L_k - c) * A.
                const Poly c2 = scale(lk + Poly::constant(Rational(-c)), half);
                const EqProof eq_c = prove_eq_mult(b, weight_eq.at(sub.mask), c2);
                cur = b.add_lines(cur, eq_c.bwd);
                pieces.push_back(cur);
            }
            // Close: D_c(L_k)*(sum_sat M - 1) = L^2*P - (2c-1)*L*P + c(c-1)*P.
            const EqProof eq_d = b.eq_add(
                e_ll, b.eq_add(b.eq_scaled(e_l, Rational(1 - 2 * c)),
                               b.eq_scaled(e_sat, Rational(c) * Rational(c - 1))));
            const LineId res =
                pieces.empty() ? eq_d.bwd : b.add_lines(b.sum_lines(pieces), eq_d.bwd);
            if (!(b.poly(res) == gap_poly(lk, Rational(c)))) {
                throw BuildError(Kind::Precondition, "level derivation mismatch");
            }
            memo[{k, c}] = res;
        }
    }

    // Endgame: D_{q+1}(L_0) = -1/4; multiply by 4.
    const LineId final_gap = memo.at({0, q + 1});
    const auto endgame = b.poly(final_gap).constant_value();
    if (!endgame || *endgame != Rational(-1, 4)) {
        throw BuildError(Kind::Precondition, "endgame constant is not -1/4");
    }
    b.scale_line(final_gap, Rational(4));

    RefutationReport report;
    report.endgame_constant = *endgame;
    report.thresholds = to_sorted(plan);
    report.gap_ranges = b.gap_ranges();
    report.proof = b.take_proof();
    report.gap_max_degree = max_degree_in_ranges(report.proof, report.gap_ranges);
    return report;
}

RefutationReport refute_fp(const LinSystemFp& sys, const Certificate& cert) {
    if (!certificate_valid(sys, cert)) {
        throw BuildError(Kind::InvalidCertificate, "certificate identities fail");
    }
    if (sys.var_count() == 0) {
        throw BuildError(Kind::NoVariables, "need at least one variable");
    }
    const std::uint64_t p = sys.p();

    const HypothesisBank bank = HypothesisBank::for_fp(sys);
    ProofBuilder b(VarMode::Indicator, p, bank.polys(), indicator_var(0, 0));
    const auto& certificate_rows = cert.rows;
    const std::size_t levels = certificate_rows.size();
    std::vector<std::uint64_t> mult;
    for (const auto y : cert.multipliers) mult.push_back(y % p);

    // Level forms L_k = (1/p)(sum_{idx<k} y sum_i a_i X_i + sum_{idx>=k} y b),
    // with X_i = sum_l l * x_i(l).
    std::vector<Poly> level;
    level.reserve(levels + 1);
    {
        std::vector<Rational> col(sys.var_count(), Rational(0));
        Rational rhs(0);
        for (std::size_t idx = 0; idx < levels; ++idx) {
            rhs += Rational(static_cast<long long>(mult[idx])) *
                   Rational(sys.rows()[certificate_rows[idx]].rhs);
        }
        const Rational inv_p(1, static_cast<long long>(p));
        for (std::size_t k = 0; k <= levels; ++k) {
            if (k > 0) {
                const auto& row = sys.rows()[certificate_rows[k - 1]];
                const Rational y(static_cast<long long>(mult[k - 1]));
                for (std::uint32_t i = 0; i < sys.var_count(); ++i) {
                    col[i] += y * Rational(row.coeffs[i]);
                }
                rhs -= y * Rational(row.rhs);
            }
            std::vector<Poly::Term> terms;
            auto& pool = MonoPool::instance();
            for (std::uint32_t i = 0; i < sys.var_count(); ++i) {
                if (col[i].is_zero()) continue;
                for (std::uint32_t l = 1; l < p; ++l) {
                    terms.push_back({pool.var(indicator_var(i, l)),
                                     col[i] * Rational(l) * inv_p});
                }
            }
            if (!rhs.is_zero()) terms.push_back({pool.constant(), rhs * inv_p});
            level.push_back(Poly::from_terms(std::move(terms)));
        }
    }

    // Sum of weighted right-hand sides is pq + 1.
    long long rhs_sum = 0;
    for (std::size_t idx = 0; idx < levels; ++idx) {
        rhs_sum += static_cast<long long>(mult[idx]) * sys.rows()[certificate_rows[idx]].rhs;
    }
    const long long q = (rhs_sum - 1) / static_cast<long long>(p);

    // Backward-closure threshold plan.
    std::vector<std::set<long long>> plan(levels + 1);
    plan[0] = {q + 1};
    for (std::size_t k = 0; k < levels; ++k) {
        const std::size_t row = certificate_rows[k];
        const auto support = sys.support(row);
        std::vector<std::uint32_t> coeffs;
        for (const auto i : support) coeffs.push_back(sys.rows()[row].coeffs[i]);
        const long long row_rhs = sys.rows()[row].rhs;
        const long long y = static_cast<long long>(mult[k]);
        std::set<long long> shifts;
        for (const auto& vec : enumerate_vectors(coeffs, sys.rows()[row].rhs, p)) {
            if (vec.satisfying) {
                shifts.insert((static_cast<long long>(vec.t) - row_rhs) /
                              static_cast<long long>(p) * y);
            }
        }
        for (const long long c : plan[k]) {
            for (const long long s : shifts) plan[k + 1].insert(c + s);
        }
    }
    assert_thresholds_in_range(plan, static_cast<unsigned long long>(p) * p * sys.var_count());

    GapProver gap(b, gap_form(level[levels]));
    std::map<std::pair<std::size_t, long long>, LineId> memo;
    for (const long long c : plan[levels]) memo[{levels, c}] = gap.prove(c);

    OrthoCache ortho;
    for (std::size_t down = 0; down < levels; ++down) {
        const std::size_t k = levels - 1 - down;
        const std::size_t row = certificate_rows[k];
        const auto support = sys.support(row);
        std::vector<std::uint32_t> coeffs;
        for (const auto i : support) coeffs.push_back(sys.rows()[row].coeffs[i]);
        const long long row_rhs = sys.rows()[row].rhs;
        const Rational y_over_p(static_cast<long long>(mult[k]), static_cast<long long>(p));
        const Poly& lk = level[k];
        const Poly& lk1 = level[k + 1];
        const auto vectors = enumerate_vectors(coeffs, sys.rows()[row].rhs, p);

        std::map<std::uint64_t, EqProof> weight_eq;
        for (const auto& vec : vectors) {
            if (vec.satisfying) {
                weight_eq.emplace(vec.code,
                                  prove_weight_identity_fp(b, support, coeffs, vec.z, p));
            }
        }
        EqProof e_sat = prove_partition_unity_fp(b, bank, support, p, ortho);
        for (const auto& vec : vectors) {
            if (vec.satisfying) continue;
            const EqProof kill = prove_violated_monomial_fp(b, bank, sys, row, vec);
            e_sat = b.eq_add(e_sat, b.eq_negate(kill));
        }
        const EqProof e_l = prove_eq_mult(b, e_sat, lk);
        const EqProof e_ll = prove_eq_mult(b, e_l, lk);

        for (const long long c : plan[k]) {
            std::vector<LineId> pieces;
            for (const auto& vec : vectors) {
                if (!vec.satisfying) continue;
                const long long d =
                    c + (static_cast<long long>(vec.t) - row_rhs) / static_cast<long long>(p) *
                            static_cast<long long>(mult[k]);
                LineId cur = memo.at({k + 1, d});
                for (std::size_t i = 0; i < support.size(); ++i) {
                    cur = b.mult_var(cur, indicator_var(support[i], vec.z[i]));
                }
                for (std::size_t i = 0; i < support.size(); ++i) {
                    for (std::uint32_t l = 0; l < p; ++l) {
                        if (l != vec.z[i]) cur = b.mult_compl(cur, indicator_var(support[i], l));
                    }
                }
                const Poly c1 = scale(lk1 + Poly::constant(Rational(1 - d)), y_over_p);
                const EqProof eq_b = prove_eq_mult(b, weight_eq.at(vec.code), c1);
                cur = b.add_lines(cur, eq_b.bwd);
                const Poly c2 = scale(lk + Poly::constant(Rational(-c)), y_over_p);
                const EqProof eq_c = prove_eq_mult(b, weight_eq.at(vec.code), c2);
                cur = b.add_lines(cur, eq_c.bwd);
                pieces.push_back(cur);
            }
            const EqProof eq_d = b.eq_add(
                e_ll, b.eq_add(b.eq_scaled(e_l, Rational(1 - 2 * c)),
                               b.eq_scaled(e_sat, Rational(c) * Rational(c - 1))));
            const LineId res =
                pieces.empty() ? eq_d.bwd : b.add_lines(b.sum_lines(pieces), eq_d.bwd);
            if (!(b.poly(res) == gap_poly(lk, Rational(c)))) {
                throw BuildError(Kind::Precondition, "level derivation mismatch");
            }
            memo[{k, c}] = res;
        }
    }

    // Endgame: D_{q+1}(L_0) = (1-p)/p^2; multiply by p^2/(p-1).
    const LineId final_gap = memo.at({0, q + 1});
    const auto endgame = b.poly(final_gap).constant_value();
    const Rational expected(1 - static_cast<long long>(p),
                            static_cast<long long>(p) * static_cast<long long>(p));
    if (!endgame || *endgame != expected) {
        throw BuildError(Kind::Precondition, "endgame constant is not (1-p)/p^2");
    }
    b.scale_line(final_gap,
                 Rational(static_cast<long long>(p) * static_cast<long long>(p),
                          static_cast<long long>(p) - 1));

    RefutationReport report;
    report.endgame_constant = *endgame;
    report.thresholds = to_sorted(plan);
    report.gap_ranges = b.gap_ranges();
    report.proof = b.take_proof();
    report.gap_max_degree = max_degree_in_ranges(report.proof, report.gap_ranges);
    return report;
}

}  // namespace semialg
