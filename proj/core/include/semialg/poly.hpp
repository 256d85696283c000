#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semialg/monomial.hpp"
#include "semialg/rational.hpp"
#include "semialg/varid.hpp"

namespace semialg {

// Canonical sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in the canonical term order (degree descending, then
// monomial name ascending) with no zero coefficients, so structural equality
// is value equality and serialization is deterministic.
//
// Poly values are immutable after construction; all operations are pure.
class Poly {
  public:
    struct Term {
        const Mono* mono;
        Rational coeff;
    };

    Poly() = default;  // the zero polynomial

    static Poly constant(Rational c);
    static Poly one() { return constant(Rational(1)); }
    static Poly variable(VarId v);
    // Takes (monomial, coefficient) pairs in any order, merges and drops zeros.
    static Poly from_terms(std::vector<Term> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    // If the polynomial is a constant (including zero), its value.
    std::optional<Rational> constant_value() const;

    int degree() const noexcept;      // max total degree; degree(0) = 0
    long long size() const noexcept;  // sum of monomial total degrees; size(0) = 0

    // All distinct variables, in canonical order.
    std::vector<VarId> variables() const;

    // Exact evaluation; the assignment must cover every variable.
    Rational eval(const std::map<VarId, Rational>& assignment) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b);

    // Canonical text form; see to_string for the grammar. Round-trips exactly.
    std::string to_string() const;
    static Poly parse(std::string_view text);

  private:
    std::vector<Term> terms_;
};

// Spec-level operation names.
Poly add(const Poly& p, const Poly& q);
Poly scale(const Poly& p, const Rational& c);
Poly mul(const Poly& p, const Poly& q);
// p * v (complemented = false) or p * (1 - v) (complemented = true).
Poly mul_var(const Poly& p, VarId v, bool complemented = false);
int degree(const Poly& p);
long long size(const Poly& p);
Rational eval(const Poly& p, const std::map<VarId, Rational>& assignment);

// Decomposition p = reduced + sum_v cofactors[v] * (v^2 - v) with reduced
// multilinear, obtained by repeatedly rewriting v^e -> v^(e-1).
struct MultilinearDecomp {
    Poly reduced;
    std::vector<std::pair<VarId, Poly>> cofactors;  // canonical variable order
};
MultilinearDecomp multilinear_cofactors(const Poly& p);

}  // namespace semialg
