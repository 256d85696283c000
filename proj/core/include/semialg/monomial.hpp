#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semialg/varid.hpp"

namespace semialg {

// A canonical monomial: factors sorted by variable name, no duplicates, all
// exponents >= 1. The empty factor list is the constant monomial. Monomials
// are interned in a process-wide pool, so equality is pointer equality.
class Mono {
  public:
    using Factor = std::pair<VarId, std::uint32_t>;

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    int degree() const noexcept { return degree_; }
    bool is_constant() const noexcept { return factors_.empty(); }
    // Canonical text, e.g. "x1^2*x3_0"; empty string for the constant.
    const std::string& name() const noexcept { return name_; }

    bool multilinear() const noexcept;
    bool contains(VarId v) const noexcept;

  private:
    friend class MonoPool;
    Mono(std::vector<Factor> factors, int degree, std::string name)
        : factors_(std::move(factors)), degree_(degree), name_(std::move(name)) {}
    std::vector<Factor> factors_;
    int degree_;
    std::string name_;
};

// Canonical term order: total degree descending, then name-lexicographic
// ascending. This fixes polynomial serialization byte-for-byte.
inline bool term_order_less(const Mono* a, const Mono* b) noexcept {
    if (a->degree() != b->degree()) return a->degree() > b->degree();
    return a->name() < b->name();
}

class MonoPool {
  public:
    static MonoPool& instance();

    const Mono* constant();
    const Mono* var(VarId v, std::uint32_t exp = 1);
    // Factors may arrive unsorted and with duplicates; they are merged.
    const Mono* intern(std::vector<Mono::Factor> factors);
    const Mono* mul(const Mono* a, const Mono* b);
    const Mono* mul_var(const Mono* a, VarId v, std::uint32_t exp = 1);
    // Divides a by v^exp; a must contain v with at least that exponent.
    const Mono* div_var(const Mono* a, VarId v, std::uint32_t exp = 1);

    std::size_t size() const;

  private:
    MonoPool() = default;
    const Mono* intern_sorted(std::vector<Mono::Factor> factors);

    mutable std::mutex mu_;
    std::unordered_map<std::string_view, std::unique_ptr<Mono>> by_name_;
};

}  // namespace semialg
