#include "semialg/proof.hpp"

#include <algorithm>
#include <string>

#include "semialg/errors.hpp"
#include "semialg/linsystem.hpp"

namespace semialg {

namespace {

using Kind = CheckError::Kind;

std::string short_poly(const Poly& p) {
    std::string s = p.to_string();
    if (s.size() > 120) {
        s.resize(117);
        s += "...";
    }
    return s;
}

void check_flavor(const Proof& proof, const Poly& poly, std::size_t line) {
    for (const auto& t : poly.terms()) {
        for (const auto& [v, e] : t.mono->factors()) {
            const bool indicator = v.is_indicator();
            if (indicator != (proof.mode == VarMode::Indicator)) {
                throw CheckError(Kind::FlavorMixing, line,
                                 "variable " + v.name() + " has the wrong flavor");
            }
            if (indicator && v.value() >= proof.p) {
                throw CheckError(Kind::FlavorMixing, line,
                                 "indicator value out of range in " + v.name());
            }
        }
    }
}

void check_flavor_var(const Proof& proof, VarId v, std::size_t line) {
    const bool indicator = v.is_indicator();
    if (indicator != (proof.mode == VarMode::Indicator)) {
        throw CheckError(Kind::FlavorMixing, line,
                         "variable " + v.name() + " has the wrong flavor");
    }
    if (indicator && v.value() >= proof.p) {
        throw CheckError(Kind::FlavorMixing, line, "indicator value out of range in " + v.name());
    }
}

Poly axiom_poly(const AxiomJust& just) {
    const Poly v = Poly::variable(just.var);
    switch (just.kind) {
        case AxiomKind::NonNeg: return v;
        case AxiomKind::ComplNonNeg: return Poly::one() - v;
        case AxiomKind::BoolUp: return v * v - v;
        case AxiomKind::BoolDown: return v - v * v;
    }
    throw Error("unreachable axiom kind");
}

unsigned coeff_bits(const Rational& r) {
    return std::max(r.num_bits(), r.den_bits());
}

void fold_metrics(ProofMetrics& m, const Poly& poly) {
    m.degree = std::max(m.degree, poly.degree());
    for (const auto& t : poly.terms()) {
        m.max_coeff_bits = std::max(m.max_coeff_bits, coeff_bits(t.coeff));
    }
}

ProofMetrics compute_metrics(const Proof& proof) {
    ProofMetrics m;
    m.line_count = proof.lines.size();
    for (const auto& h : proof.hypotheses) fold_metrics(m, h);
    std::vector<unsigned> refs(proof.lines.size(), 0);
    for (const auto& line : proof.lines) {
        fold_metrics(m, line.poly);
        m.size += line.poly.size();
        if (const auto* lc = std::get_if<LinCombJust>(&line.just)) {
            m.length++;
            refs[lc->p1]++;
            refs[lc->p2]++;
            m.max_coeff_bits = std::max(m.max_coeff_bits, coeff_bits(lc->a));
            m.max_coeff_bits = std::max(m.max_coeff_bits, coeff_bits(lc->b));
        } else if (const auto* mv = std::get_if<MultVarJust>(&line.just)) {
            m.length++;
            refs[mv->p1]++;
        } else if (const auto* mc = std::get_if<MultComplJust>(&line.just)) {
            m.length++;
            refs[mc->p1]++;
        }
    }
    m.tree_like = std::all_of(refs.begin(), refs.end(), [](unsigned r) { return r <= 1; });
    return m;
}

}  // namespace

ProofMetrics check(const Proof& proof) {
    if (proof.mode == VarMode::Plain && proof.p != 2) {
        throw CheckError(Kind::BadStructure, CheckError::npos,
                         "plain mode requires field 2");
    }
    if (!is_prime(proof.p)) {
        throw CheckError(Kind::BadStructure, CheckError::npos, "field is not prime");
    }
    for (const auto& h : proof.hypotheses) check_flavor(proof, h, CheckError::npos);

    for (std::size_t i = 0; i < proof.lines.size(); ++i) {
        const ProofLine& line = proof.lines[i];
        if (line.id != i) {
            throw CheckError(Kind::BadStructure, i, "line ids must be dense and in order");
        }
        check_flavor(proof, line.poly, i);

        const auto ref = [&](std::size_t target) -> const Poly& {
            if (target >= i) {
                throw CheckError(Kind::BadReference, i,
                                 "line " + std::to_string(i) + " references line " +
                                     std::to_string(target));
            }
            return proof.lines[target].poly;
        };

        Poly expected;
        if (const auto* ax = std::get_if<AxiomJust>(&line.just)) {
            check_flavor_var(proof, ax->var, i);
            expected = axiom_poly(*ax);
        } else if (const auto* hy = std::get_if<HypJust>(&line.just)) {
            if (hy->index >= proof.hypotheses.size()) {
                throw CheckError(Kind::BadHypIndex, i,
                                 "hypothesis index " + std::to_string(hy->index) +
                                     " out of range");
            }
            expected = proof.hypotheses[hy->index];
        } else if (const auto* lc = std::get_if<LinCombJust>(&line.just)) {
            if (lc->a.sign() < 0 || lc->b.sign() < 0) {
                throw CheckError(Kind::NegativeScalar, i,
                                 "negative scalar in positive linear combination");
            }
            expected = scale(ref(lc->p1), lc->a) + scale(ref(lc->p2), lc->b);
        } else if (const auto* mv = std::get_if<MultVarJust>(&line.just)) {
            check_flavor_var(proof, mv->var, i);
            expected = mul_var(ref(mv->p1), mv->var, false);
        } else if (const auto* mc = std::get_if<MultComplJust>(&line.just)) {
            check_flavor_var(proof, mc->var, i);
            expected = mul_var(ref(mc->p1), mc->var, true);
        } else {
            throw CheckError(Kind::BadStructure, i, "unknown justification");
        }

        if (!(expected == line.poly)) {
            throw CheckError(Kind::PolyMismatch, i,
                             "line " + std::to_string(i) + ": expected " +
                                 short_poly(expected) + ", found " + short_poly(line.poly));
        }
    }
    return compute_metrics(proof);
}

ProofMetrics metrics(const Proof& proof) {
    return compute_metrics(proof);
}

bool is_refutation(const Proof& proof) {
    if (proof.lines.empty()) return false;
    const auto c = proof.lines.back().poly.constant_value();
    return c.has_value() && *c == Rational(-1);
}

namespace {

// Over 0/1 points a monomial evaluates to 1 exactly when every one of its
// variables is set, so each term compiles to a bitmask over the universe.
struct CompiledPoly {
    std::vector<std::pair<std::uint64_t, Rational>> terms;

    int sign_at(std::uint64_t point) const {
        Rational acc(0);
        for (const auto& [mask, coeff] : terms) {
            if ((point & mask) == mask) acc += coeff;
        }
        return acc.sign();
    }
};

CompiledPoly compile_for_probe(const Poly& poly, const std::map<VarId, std::size_t>& slot) {
    CompiledPoly out;
    out.terms.reserve(poly.terms().size());
    for (const auto& t : poly.terms()) {
        std::uint64_t mask = 0;
        for (const auto& [v, e] : t.mono->factors()) {
            auto it = slot.find(v);
            if (it == slot.end()) {
                throw EvalError("probe universe misses variable " + v.name());
            }
            mask |= std::uint64_t(1) << it->second;
        }
        out.terms.emplace_back(mask, t.coeff);
    }
    return out;
}

}  // namespace

SoundnessReport soundness_probe(const Proof& proof, const std::vector<VarId>& var_universe,
                                std::uint64_t cap, bool check_lines) {
    if (var_universe.size() >= 63 ||
        (std::uint64_t(1) << var_universe.size()) > cap) {
        throw CheckError(CheckError::Kind::UniverseTooLarge, CheckError::npos,
                         "2^|universe| exceeds the probe cap");
    }
    std::map<VarId, std::size_t> slot;
    for (std::size_t k = 0; k < var_universe.size(); ++k) slot[var_universe[k]] = k;

    std::vector<CompiledPoly> hyps;
    hyps.reserve(proof.hypotheses.size());
    for (const auto& h : proof.hypotheses) hyps.push_back(compile_for_probe(h, slot));
    std::vector<CompiledPoly> lines;
    if (check_lines) {
        lines.reserve(proof.lines.size());
        for (const auto& line : proof.lines) lines.push_back(compile_for_probe(line.poly, slot));
    }

    const std::uint64_t total = std::uint64_t(1) << var_universe.size();
    SoundnessReport report;
    report.points = total;

    for (std::uint64_t bits = 0; bits < total; ++bits) {
        bool hyps_ok = true;
        for (const auto& h : hyps) {
            if (h.sign_at(bits) < 0) {
                hyps_ok = false;
                break;
            }
        }
        if (!hyps_ok) continue;
        report.hypothesis_satisfying++;
        if (!check_lines) continue;
        for (std::size_t k = 0; k < lines.size(); ++k) {
            if (lines[k].sign_at(bits) < 0) {
                std::map<VarId, Rational> point;
                for (std::size_t j = 0; j < var_universe.size(); ++j) {
                    point[var_universe[j]] = Rational((bits >> j) & 1);
                }
                report.violation = SoundnessViolation{proof.lines[k].id, std::move(point)};
                return report;
            }
        }
    }
    return report;
}

}  // namespace semialg
