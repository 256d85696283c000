#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semialg/linsystem.hpp"
#include "semialg/poly.hpp"

namespace semialg {

// Column c of a system maps to the plain variable "x{c+1}" or the indicator
// family "x{c+1}_{v}".
VarId plain_var(std::uint32_t column);
VarId indicator_var(std::uint32_t column, std::uint32_t value);

// Plain-mode inequalities for one F_2 row a^T x = b: for every T subseteq
// supp(a) with |T| = 1 - b (mod 2), the polynomial
//   sum_{i in T} (1 - x_i) + sum_{i in supp(a) \ T} x_i - 1        (meaning >= 0).
// Subsets T enumerate in binary counting order over the ascending support
// (bit k of the mask <-> support[k] in T). Throws EncodeError(EmptySupport).
std::vector<Poly> encode_f2(const std::vector<std::uint32_t>& row, std::uint32_t b);

// Indicator-mode inequalities for one F_p row: for every z in F_p^I with
// sum a_i z_i != b (mod p), the polynomial
//   sum_{i in I} (1 - x_i(z_i)) - 1                                 (meaning >= 0),
// with z enumerated in mixed-radix order (first support column is the least
// significant digit). Throws EncodeError(EmptySupport).
std::vector<Poly> encode_fp(const std::vector<std::uint32_t>& row, std::uint32_t b,
                            std::uint64_t p);

// Indicator axioms: for each i in [n], the equation
//   x_i(0) + ... + x_i(p-1) = 1
// as the pair of inequalities (sum - 1, 1 - sum).
std::vector<std::pair<Poly, Poly>> z_axioms(std::uint32_t n, std::uint64_t p);

// Extended monomials.
struct ExtendedMonomial {
    std::vector<std::uint32_t> columns;  // I, ascending
    Poly expanded;
};

// M^I_T = prod_{i in T} x_i * prod_{i in I\T} (1 - x_i); bit k of t_mask
// selects columns[k] into T.
ExtendedMonomial ext_monomial_f2(const std::vector<std::uint32_t>& columns,
                                 std::uint32_t t_mask);

// M_z = prod_{i in I} ( x_i(z_i) * prod_{l != z_i} (1 - x_i(l)) ).
ExtendedMonomial ext_monomial_fp(const std::vector<std::uint32_t>& columns,
                                 const std::vector<std::uint32_t>& z, std::uint64_t p);

// Selector enumeration used by the encoders and the proof builders.
struct SubsetInfo {
    std::uint32_t mask;      // over the ascending support
    std::uint32_t weight;    // |T|
    bool satisfying;         // |T| = b (mod 2)
};
std::vector<SubsetInfo> enumerate_subsets(std::uint32_t support_size, std::uint32_t b);

struct VectorInfo {
    std::vector<std::uint32_t> z;  // parallel to the ascending support
    std::uint64_t code;            // mixed-radix code
    std::uint64_t t;               // sum a_i z_i over the integers
    bool satisfying;               // t = b (mod p)
};
std::vector<VectorInfo> enumerate_vectors(const std::vector<std::uint32_t>& support_coeffs,
                                          std::uint32_t b, std::uint64_t p);

// The ordered hypothesis list of a refutation, with a reverse index from
// (row, selector) to hypothesis position. Positions are stable: S-blocks in
// row order (selectors in their enumeration order), then, in indicator mode,
// the Z-axiom pairs for i = 1..n. Rows (0 | 0) contribute nothing; rows
// (0 | b != 0) contribute the single inequality -1 (selector 0).
class HypothesisBank {
  public:
    static HypothesisBank for_f2(const LinSystemFp& sys);
    static HypothesisBank for_fp(const LinSystemFp& sys);

    const std::vector<Poly>& polys() const noexcept { return polys_; }

    std::size_t f2_index(std::size_t row, std::uint32_t t_mask) const;
    std::size_t fp_index(std::size_t row, std::uint64_t z_code) const;
    // direction false: sum - 1 >= 0, true: 1 - sum >= 0.
    std::size_t z_index(std::uint32_t column, bool direction) const;

  private:
    std::vector<Poly> polys_;
    std::unordered_map<std::uint64_t, std::size_t> row_selector_;
    std::unordered_map<std::uint64_t, std::size_t> z_;
};

}  // namespace semialg
