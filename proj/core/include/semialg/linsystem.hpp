#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace semialg {

// A row a^T x = b with entries already reduced into [0, p).
struct LinRow {
    std::vector<std::uint32_t> coeffs;  // dense, length n
    std::uint32_t rhs = 0;
};

// Linear system over the prime field F_p.
class LinSystemFp {
  public:
    LinSystemFp(std::uint64_t p, std::uint32_t n);

    void add_row(std::vector<std::uint32_t> coeffs, std::uint32_t rhs);

    std::uint64_t p() const noexcept { return p_; }
    std::uint32_t var_count() const noexcept { return n_; }
    const std::vector<LinRow>& rows() const noexcept { return rows_; }

    std::vector<std::uint32_t> support(std::size_t row) const;  // ascending column indices
    std::uint32_t width() const noexcept;                       // max row support size

  private:
    std::uint64_t p_;
    std::uint32_t n_;
    std::vector<LinRow> rows_;
};

struct Solution {
    std::vector<std::uint32_t> assignment;  // length n, values in [0, p)
};

// Row subset J (ascending) with multipliers y such that
//   sum_{j in J} y_j a_j = 0  and  sum_{j in J} y_j b_j = 1   in F_p,
// witnessing unsatisfiability. All multipliers are nonzero.
struct Certificate {
    std::vector<std::size_t> rows;
    std::vector<std::uint32_t> multipliers;
};

using SolveResult = std::variant<Solution, Certificate>;

// Gaussian elimination with multiplier tracking. Deterministic: rows are
// processed in order and pivots are the first nonzero column. Rows (0 | 0)
// are dropped; a row (0 | b), b != 0 yields the trivial certificate.
SolveResult solve(const LinSystemFp& sys);

// Multiplicative inverse mod p; throws LinalgError(ZeroInverse) when c = 0 mod p.
std::uint64_t fp_inverse(std::uint64_t c, std::uint64_t p);

bool is_prime(std::uint64_t p);

// Exhaustive satisfiability check; requires p^n <= cap.
std::optional<Solution> brute_force_sat(const LinSystemFp& sys,
                                        std::uint64_t cap = std::uint64_t(1) << 20);

// True iff the assignment satisfies every row.
bool satisfies(const LinSystemFp& sys, const std::vector<std::uint32_t>& assignment);

// Check both certificate identities exactly.
bool certificate_valid(const LinSystemFp& sys, const Certificate& cert);

}  // namespace semialg
