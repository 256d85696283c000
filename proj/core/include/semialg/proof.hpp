#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "semialg/poly.hpp"

namespace semialg {

// Variable regime of a proof. Plain mode works over direct 0/1 variables
// x{i} (two-element field encoding); Indicator mode works over indicator
// variables x{i}_{v}. The two flavors never mix inside one proof.
enum class VarMode { Plain, Indicator };

enum class AxiomKind {
    NonNeg,        // v >= 0
    ComplNonNeg,   // 1 - v >= 0
    BoolUp,        // v^2 - v >= 0
    BoolDown,      // v - v^2 >= 0
};

struct AxiomJust {
    AxiomKind kind;
    VarId var;
};
struct HypJust {
    std::size_t index;
};
struct LinCombJust {
    std::size_t p1;
    Rational a;
    std::size_t p2;
    Rational b;
};
struct MultVarJust {
    std::size_t p1;
    VarId var;
};
struct MultComplJust {
    std::size_t p1;
    VarId var;
};

using Justification = std::variant<AxiomJust, HypJust, LinCombJust, MultVarJust, MultComplJust>;

// One derived inequality: the assertion poly >= 0, together with the rule
// instance that produced it. The poly is checked against the rule, never
// trusted.
struct ProofLine {
    std::size_t id;
    Poly poly;
    Justification just;
};

struct ProofMetrics {
    int degree = 0;            // max poly degree over lines and hypotheses
    std::size_t length = 0;    // number of inference lines (lincomb / lifting)
    long long size = 0;        // sum over lines of poly size
    bool tree_like = true;     // every line referenced at most once
    std::size_t line_count = 0;
    unsigned max_coeff_bits = 0;  // supplementary: max coefficient magnitude in bits
};

struct Proof {
    VarMode mode = VarMode::Plain;
    std::uint64_t p = 2;  // field of the encoded system (2 in Plain mode)
    std::vector<Poly> hypotheses;
    std::vector<ProofLine> lines;
    std::optional<Poly> goal;
};

// Verifies every line by exact recomputation from its justification.
// Throws CheckError on the first violation; returns metrics on acceptance.
ProofMetrics check(const Proof& proof);

// Metrics of an (already accepted) proof, without re-verification.
ProofMetrics metrics(const Proof& proof);

// True iff the final line asserts the constant -1 >= 0. Meaningful only for
// proofs accepted by check().
bool is_refutation(const Proof& proof);

struct SoundnessViolation {
    std::size_t line;
    std::map<VarId, Rational> point;
};

struct SoundnessReport {
    std::uint64_t points = 0;                 // Boolean points enumerated
    std::uint64_t hypothesis_satisfying = 0;  // points where every hypothesis is >= 0
    std::optional<SoundnessViolation> violation;
    bool ok() const { return !violation.has_value(); }
};

// Enumerates all 0/1 assignments to var_universe (2^|universe| <= cap, else
// CheckError(UniverseTooLarge)). At every point satisfying all hypotheses,
// asserts every line evaluates >= 0 (when check_lines is set) and reports the
// satisfying-point count.
SoundnessReport soundness_probe(const Proof& proof, const std::vector<VarId>& var_universe,
                                std::uint64_t cap = std::uint64_t(1) << 20,
                                bool check_lines = true);

}  // namespace semialg
