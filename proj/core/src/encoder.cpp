#include "semialg/encoder.hpp"

#include <string>

#include "semialg/errors.hpp"

namespace semialg {

VarId plain_var(std::uint32_t column) {
    return VarId::plain(column + 1);
}

VarId indicator_var(std::uint32_t column, std::uint32_t value) {
    return VarId::indicator(column + 1, value);
}

namespace {

std::vector<std::uint32_t> support_of(const std::vector<std::uint32_t>& row) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t i = 0; i < row.size(); ++i) {
        if (row[i] != 0) s.push_back(i);
    }
    return s;
}

}  // namespace

std::vector<SubsetInfo> enumerate_subsets(std::uint32_t support_size, std::uint32_t b) {
    std::vector<SubsetInfo> out;
    const std::uint32_t count = 1u << support_size;
    out.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        const auto weight = static_cast<std::uint32_t>(__builtin_popcount(mask));
        out.push_back({mask, weight, weight % 2 == b % 2});
    }
    return out;
}

std::vector<VectorInfo> enumerate_vectors(const std::vector<std::uint32_t>& support_coeffs,
                                          std::uint32_t b, std::uint64_t p) {
    std::vector<VectorInfo> out;
    const std::size_t k = support_coeffs.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= p;
    out.reserve(total);
    std::vector<std::uint32_t> z(k, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t t = 0;
        for (std::size_t i = 0; i < k; ++i) t += static_cast<std::uint64_t>(support_coeffs[i]) * z[i];
        out.push_back({z, code, t, t % p == b % p});
        for (std::size_t i = 0; i < k; ++i) {
            if (++z[i] < p) break;
            z[i] = 0;
        }
    }
    return out;
}

std::vector<Poly> encode_f2(const std::vector<std::uint32_t>& row, std::uint32_t b) {
    const auto support = support_of(row);
    if (support.empty()) {
        throw EncodeError(EncodeError::Kind::EmptySupport, "row has empty support");
    }
    std::vector<Poly> out;
    for (const auto& sub : enumerate_subsets(static_cast<std::uint32_t>(support.size()), b)) {
        if (sub.satisfying) continue;  // keep |T| = 1-b (mod 2)
        std::vector<Poly::Term> terms;
        auto& pool = MonoPool::instance();
        for (std::size_t k = 0; k < support.size(); ++k) {
            const bool in_t = (sub.mask >> k) & 1;
            terms.push_back({pool.var(plain_var(support[k])), Rational(in_t ? -1 : 1)});
        }
        terms.push_back({pool.constant(), Rational(static_cast<long long>(sub.weight) - 1)});
        out.push_back(Poly::from_terms(std::move(terms)));
    }
    return out;
}

std::vector<Poly> encode_fp(const std::vector<std::uint32_t>& row, std::uint32_t b,
                            std::uint64_t p) {
    const auto support = support_of(row);
    if (support.empty()) {
        throw EncodeError(EncodeError::Kind::EmptySupport, "row has empty support");
    }
    std::vector<std::uint32_t> coeffs;
    coeffs.reserve(support.size());
    for (auto i : support) coeffs.push_back(row[i]);

    std::vector<Poly> out;
    auto& pool = MonoPool::instance();
    for (const auto& vec : enumerate_vectors(coeffs, b, p)) {
        if (vec.satisfying) continue;
        std::vector<Poly::Term> terms;
        for (std::size_t k = 0; k < support.size(); ++k) {
            terms.push_back({pool.var(indicator_var(support[k], vec.z[k])), Rational(-1)});
        }
        terms.push_back({pool.constant(), Rational(static_cast<long long>(support.size()) - 1)});
        out.push_back(Poly::from_terms(std::move(terms)));
    }
    return out;
}

std::vector<std::pair<Poly, Poly>> z_axioms(std::uint32_t n, std::uint64_t p) {
    std::vector<std::pair<Poly, Poly>> out;
    out.reserve(n);
    auto& pool = MonoPool::instance();
    for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<Poly::Term> terms;
        for (std::uint32_t v = 0; v < p; ++v) {
            terms.push_back({pool.var(indicator_var(i, v)), Rational(1)});
        }
        terms.push_back({pool.constant(), Rational(-1)});
        Poly fwd = Poly::from_terms(std::move(terms));
        Poly bwd = -fwd;
        out.emplace_back(std::move(fwd), std::move(bwd));
    }
    return out;
}

ExtendedMonomial ext_monomial_f2(const std::vector<std::uint32_t>& columns,
                                 std::uint32_t t_mask) {
    Poly prod = Poly::one();
    for (std::size_t k = 0; k < columns.size(); ++k) {
        prod = mul_var(prod, plain_var(columns[k]), ((t_mask >> k) & 1) == 0);
    }
    return {columns, std::move(prod)};
}

ExtendedMonomial ext_monomial_fp(const std::vector<std::uint32_t>& columns,
                                 const std::vector<std::uint32_t>& z, std::uint64_t p) {
    if (z.size() != columns.size()) throw Error("z length does not match support");
    Poly prod = Poly::one();
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (z[k] >= p) throw Error("z entry out of range");
        prod = mul_var(prod, indicator_var(columns[k], z[k]), false);
        for (std::uint32_t l = 0; l < p; ++l) {
            if (l == z[k]) continue;
            prod = mul_var(prod, indicator_var(columns[k], l), true);
        }
    }
    return {columns, std::move(prod)};
}

namespace {

std::uint64_t selector_key(std::size_t row, std::uint64_t selector) {
    if (selector >= (std::uint64_t(1) << 32) || row >= (std::size_t(1) << 31)) {
        throw Error("selector space too large");
    }
    return (static_cast<std::uint64_t>(row) << 32) | selector;
}

}  // namespace

HypothesisBank HypothesisBank::for_f2(const LinSystemFp& sys) {
    if (sys.p() != 2) throw Error("plain-mode bank requires field 2");
    HypothesisBank bank;
    for (std::size_t j = 0; j < sys.rows().size(); ++j) {
        const auto& row = sys.rows()[j];
        const auto support = sys.support(j);
        if (support.empty()) {
            if (row.rhs == 0) continue;
            bank.row_selector_[selector_key(j, 0)] = bank.polys_.size();
            bank.polys_.push_back(Poly::constant(Rational(-1)));
            continue;
        }
        for (const auto& sub :
             enumerate_subsets(static_cast<std::uint32_t>(support.size()), row.rhs)) {
            if (sub.satisfying) continue;
            bank.row_selector_[selector_key(j, sub.mask)] = bank.polys_.size();
            std::vector<Poly::Term> terms;
            auto& pool = MonoPool::instance();
            for (std::size_t k = 0; k < support.size(); ++k) {
                const bool in_t = (sub.mask >> k) & 1;
                terms.push_back({pool.var(plain_var(support[k])), Rational(in_t ? -1 : 1)});
            }
            terms.push_back({pool.constant(), Rational(static_cast<long long>(sub.weight) - 1)});
            bank.polys_.push_back(Poly::from_terms(std::move(terms)));
        }
    }
    return bank;
}

HypothesisBank HypothesisBank::for_fp(const LinSystemFp& sys) {
    HypothesisBank bank;
    const std::uint64_t p = sys.p();
    for (std::size_t j = 0; j < sys.rows().size(); ++j) {
        const auto& row = sys.rows()[j];
        const auto support = sys.support(j);
        if (support.empty()) {
            if (row.rhs == 0) continue;
            bank.row_selector_[selector_key(j, 0)] = bank.polys_.size();
            bank.polys_.push_back(Poly::constant(Rational(-1)));
            continue;
        }
        std::vector<std::uint32_t> coeffs;
        for (auto i : support) coeffs.push_back(row.coeffs[i]);
        auto& pool = MonoPool::instance();
        for (const auto& vec : enumerate_vectors(coeffs, row.rhs, p)) {
            if (vec.satisfying) continue;
            bank.row_selector_[selector_key(j, vec.code)] = bank.polys_.size();
            std::vector<Poly::Term> terms;
            for (std::size_t k = 0; k < support.size(); ++k) {
                terms.push_back({pool.var(indicator_var(support[k], vec.z[k])), Rational(-1)});
            }
            terms.push_back({pool.constant(), Rational(static_cast<long long>(support.size()) - 1)});
            bank.polys_.push_back(Poly::from_terms(std::move(terms)));
        }
    }
    auto axioms = z_axioms(sys.var_count(), p);
    for (std::uint32_t i = 0; i < axioms.size(); ++i) {
        bank.z_[(static_cast<std::uint64_t>(i) << 1) | 0] = bank.polys_.size();
        bank.polys_.push_back(std::move(axioms[i].first));
        bank.z_[(static_cast<std::uint64_t>(i) << 1) | 1] = bank.polys_.size();
        bank.polys_.push_back(std::move(axioms[i].second));
    }
    return bank;
}

std::size_t HypothesisBank::f2_index(std::size_t row, std::uint32_t t_mask) const {
    auto it = row_selector_.find(selector_key(row, t_mask));
    if (it == row_selector_.end()) throw Error("no such hypothesis (row/subset)");
    return it->second;
}

std::size_t HypothesisBank::fp_index(std::size_t row, std::uint64_t z_code) const {
    auto it = row_selector_.find(selector_key(row, z_code));
    if (it == row_selector_.end()) throw Error("no such hypothesis (row/vector)");
    return it->second;
}

std::size_t HypothesisBank::z_index(std::uint32_t column, bool direction) const {
    auto it = z_.find((static_cast<std::uint64_t>(column) << 1) | (direction ? 1 : 0));
    if (it == z_.end()) throw Error("no such indicator axiom");
    return it->second;
}

}  // namespace semialg
