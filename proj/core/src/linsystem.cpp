#include "semialg/linsystem.hpp"

#include <algorithm>

#include "semialg/errors.hpp"

namespace semialg {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t fp_inverse(std::uint64_t c, std::uint64_t p) {
    c %= p;
    if (c == 0) throw LinalgError(LinalgError::Kind::ZeroInverse, "no inverse of 0 mod p");
    // Extended Euclid on (c, p).
    long long r0 = static_cast<long long>(c), r1 = static_cast<long long>(p);
    long long s0 = 1, s1 = 0;
    while (r1 != 0) {
        const long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    long long inv = s0 % static_cast<long long>(p);
    if (inv < 0) inv += static_cast<long long>(p);
    return static_cast<std::uint64_t>(inv);
}

LinSystemFp::LinSystemFp(std::uint64_t p, std::uint32_t n) : p_(p), n_(n) {
    if (!is_prime(p)) {
        throw LinalgError(LinalgError::Kind::NonPrimeModulus,
                          "modulus " + std::to_string(p) + " is not prime");
    }
    if (p > (std::uint64_t(1) << 31)) {
        throw LinalgError(LinalgError::Kind::NonPrimeModulus, "modulus too large");
    }
}

void LinSystemFp::add_row(std::vector<std::uint32_t> coeffs, std::uint32_t rhs) {
    if (coeffs.size() != n_) throw Error("row length does not match variable count");
    for (auto& c : coeffs) {
        if (c >= p_) throw Error("row entry not reduced mod p");
    }
    if (rhs >= p_) throw Error("right-hand side not reduced mod p");
    rows_.push_back({std::move(coeffs), rhs});
}

std::vector<std::uint32_t> LinSystemFp::support(std::size_t row) const {
    std::vector<std::uint32_t> out;
    const auto& r = rows_.at(row);
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (r.coeffs[i] != 0) out.push_back(i);
    }
    return out;
}

std::uint32_t LinSystemFp::width() const noexcept {
    std::uint32_t w = 0;
    for (const auto& r : rows_) {
        std::uint32_t s = 0;
        for (auto c : r.coeffs) s += (c != 0);
        w = std::max(w, s);
    }
    return w;
}

namespace {

struct WorkRow {
    std::vector<std::uint32_t> coeffs;
    std::uint32_t rhs;
    std::vector<std::uint32_t> combo;  // expression over original rows
    std::uint32_t pivot;
};

Certificate extract_certificate(const std::vector<std::uint32_t>& combo, std::uint32_t rhs,
                                std::uint64_t p) {
    // Normalize so that sum y_j b_j = 1.
    const std::uint64_t inv = fp_inverse(rhs, p);
    Certificate cert;
    for (std::size_t j = 0; j < combo.size(); ++j) {
        const std::uint64_t y = (combo[j] * inv) % p;
        if (y != 0) {
            cert.rows.push_back(j);
            cert.multipliers.push_back(static_cast<std::uint32_t>(y));
        }
    }
    return cert;
}

}  // namespace

SolveResult solve(const LinSystemFp& sys) {
    const std::uint64_t p = sys.p();
    const std::uint32_t n = sys.var_count();
    const std::size_t m = sys.rows().size();

    std::vector<WorkRow> work;
    for (std::size_t j = 0; j < m; ++j) {
        WorkRow row;
        row.coeffs = sys.rows()[j].coeffs;
        row.rhs = sys.rows()[j].rhs;
        row.combo.assign(m, 0);
        row.combo[j] = 1;

        // Eliminate against established pivots, lowest column first.
        for (const auto& w : work) {
            const std::uint64_t f = row.coeffs[w.pivot];
            if (f == 0) continue;
            // w is normalized to pivot coefficient 1.
            for (std::uint32_t i = 0; i < n; ++i) {
                row.coeffs[i] = static_cast<std::uint32_t>(
                    (row.coeffs[i] + (p - f) * w.coeffs[i]) % p);
            }
            row.rhs = static_cast<std::uint32_t>((row.rhs + (p - f) * w.rhs) % p);
            for (std::size_t k = 0; k < m; ++k) {
                row.combo[k] = static_cast<std::uint32_t>(
                    (row.combo[k] + (p - f) * w.combo[k]) % p);
            }
        }

        std::uint32_t pivot = n;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (row.coeffs[i] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) {
            if (row.rhs == 0) continue;  // dependent consistent row, drop
            return extract_certificate(row.combo, row.rhs, p);
        }

        // Normalize the pivot to 1 and store.
        const std::uint64_t inv = fp_inverse(row.coeffs[pivot], p);
        for (std::uint32_t i = 0; i < n; ++i) {
            row.coeffs[i] = static_cast<std::uint32_t>((row.coeffs[i] * inv) % p);
        }
        row.rhs = static_cast<std::uint32_t>((row.rhs * inv) % p);
        for (std::size_t k = 0; k < m; ++k) {
            row.combo[k] = static_cast<std::uint32_t>((row.combo[k] * inv) % p);
        }
        row.pivot = pivot;
        work.push_back(std::move(row));
    }

    // Satisfiable: back-substitute with free variables set to 0.
    std::sort(work.begin(), work.end(),
              [](const WorkRow& a, const WorkRow& b) { return a.pivot > b.pivot; });
    Solution sol;
    sol.assignment.assign(n, 0);
    for (const auto& w : work) {
        std::uint64_t acc = w.rhs;
        for (std::uint32_t i = w.pivot + 1; i < n; ++i) {
            acc = (acc + (p - (static_cast<std::uint64_t>(w.coeffs[i]) * sol.assignment[i]) % p)) % p;
        }
        sol.assignment[w.pivot] = static_cast<std::uint32_t>(acc % p);
    }
    return sol;
}

bool satisfies(const LinSystemFp& sys, const std::vector<std::uint32_t>& assignment) {
    const std::uint64_t p = sys.p();
    for (const auto& r : sys.rows()) {
        std::uint64_t acc = 0;
        for (std::uint32_t i = 0; i < sys.var_count(); ++i) {
            acc = (acc + static_cast<std::uint64_t>(r.coeffs[i]) * assignment[i]) % p;
        }
        if (acc != r.rhs) return false;
    }
    return true;
}

std::optional<Solution> brute_force_sat(const LinSystemFp& sys, std::uint64_t cap) {
    const std::uint64_t p = sys.p();
    const std::uint32_t n = sys.var_count();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (total > cap / p) {
            throw LinalgError(LinalgError::Kind::TooLarge,
                              "p^n exceeds the enumeration cap");
        }
        total *= p;
    }
    std::vector<std::uint32_t> a(n, 0);
    for (std::uint64_t counter = 0;; ++counter) {
        if (satisfies(sys, a)) return Solution{a};
        if (counter + 1 == total) break;
        // Mixed-radix increment, least significant digit first.
        for (std::uint32_t i = 0; i < n; ++i) {
            if (++a[i] < p) break;
            a[i] = 0;
        }
    }
    return std::nullopt;
}

bool certificate_valid(const LinSystemFp& sys, const Certificate& cert) {
    if (cert.rows.size() != cert.multipliers.size() || cert.rows.empty()) return false;
    const std::uint64_t p = sys.p();
    const std::uint32_t n = sys.var_count();
    std::vector<std::uint64_t> col(n, 0);
    std::uint64_t rhs = 0;
    for (std::size_t k = 0; k < cert.rows.size(); ++k) {
        if (cert.rows[k] >= sys.rows().size()) return false;
        const std::uint64_t y = cert.multipliers[k] % p;
        if (y == 0) return false;
        if (k > 0 && cert.rows[k] <= cert.rows[k - 1]) return false;
        const auto& row = sys.rows()[cert.rows[k]];
        for (std::uint32_t i = 0; i < n; ++i) col[i] = (col[i] + y * row.coeffs[i]) % p;
        rhs = (rhs + y * row.rhs) % p;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        if (col[i] != 0) return false;
    }
    return rhs == 1;
}

}  // namespace semialg
