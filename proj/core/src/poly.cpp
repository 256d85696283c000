#include "semialg/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "semialg/errors.hpp"

namespace semialg {

namespace {

bool term_less(const Poly::Term& a, const Poly::Term& b) {
    return term_order_less(a.mono, b.mono);
}

}  // namespace

Poly Poly::constant(Rational c) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({MonoPool::instance().constant(), std::move(c)});
    return p;
}

Poly Poly::variable(VarId v) {
    Poly p;
    p.terms_.push_back({MonoPool::instance().var(v), Rational(1)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_less);
    Poly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

std::optional<Rational> Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].mono->is_constant()) return terms_[0].coeff;
    return std::nullopt;
}

int Poly::degree() const noexcept {
    // Terms are degree-descending, so the first term carries the max.
    return terms_.empty() ? 0 : terms_.front().mono->degree();
}

long long Poly::size() const noexcept {
    long long s = 0;
    for (const auto& t : terms_) s += t.mono->degree();
    return s;
}

std::vector<VarId> Poly::variables() const {
    std::vector<VarId> vars;
    for (const auto& t : terms_) {
        for (const auto& [v, e] : t.mono->factors()) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

Rational Poly::eval(const std::map<VarId, Rational>& assignment) const {
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational val = t.coeff;
        for (const auto& [v, e] : t.mono->factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                throw EvalError("assignment misses variable " + v.name());
            }
            for (std::uint32_t k = 0; k < e; ++k) val *= it->second;
        }
        acc += val;
    }
    return acc;
}

Poly Poly::operator-() const {
    Poly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ea = a.terms_.end();
    auto ib = b.terms_.begin(), eb = b.terms_.end();
    while (ia != ea && ib != eb) {
        if (ia->mono == ib->mono) {
            Rational c = ia->coeff + ib->coeff;
            if (!c.is_zero()) out.terms_.push_back({ia->mono, std::move(c)});
            ++ia;
            ++ib;
        } else if (term_order_less(ia->mono, ib->mono)) {
            out.terms_.push_back(*ia++);
        } else {
            out.terms_.push_back(*ib++);
        }
    }
    out.terms_.insert(out.terms_.end(), ia, ea);
    out.terms_.insert(out.terms_.end(), ib, eb);
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    auto& pool = MonoPool::instance();
    std::unordered_map<const Mono*, Rational> acc;
    acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 8);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            const Mono* m = pool.mul(ta.mono, tb.mono);
            auto [it, fresh] = acc.try_emplace(m, Rational(0));
            it->second += ta.coeff * tb.coeff;
        }
    }
    std::vector<Poly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) terms.push_back({m, std::move(c)});
    }
    std::sort(terms.begin(), terms.end(), term_less);
    Poly out;
    out.terms_ = std::move(terms);
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono) return false;
        if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
}

Poly add(const Poly& p, const Poly& q) {
    return p + q;
}

Poly scale(const Poly& p, const Rational& c) {
    if (c.is_zero()) return Poly();
    std::vector<Poly::Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) terms.push_back({t.mono, t.coeff * c});
    // Scaling by a nonzero constant preserves order and nonzeroness.
    Poly out = Poly::from_terms(std::move(terms));
    return out;
}

Poly mul(const Poly& p, const Poly& q) {
    return p * q;
}

Poly mul_var(const Poly& p, VarId v, bool complemented) {
    auto& pool = MonoPool::instance();
    std::vector<Poly::Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) terms.push_back({pool.mul_var(t.mono, v), t.coeff});
    Poly shifted = Poly::from_terms(std::move(terms));
    if (!complemented) return shifted;
    return p - shifted;
}

int degree(const Poly& p) {
    return p.degree();
}

long long size(const Poly& p) {
    return p.size();
}

Rational eval(const Poly& p, const std::map<VarId, Rational>& assignment) {
    return p.eval(assignment);
}

MultilinearDecomp multilinear_cofactors(const Poly& p) {
    auto& pool = MonoPool::instance();
    std::vector<Poly::Term> reduced;
    std::map<VarId, std::vector<Poly::Term>> cof;

    for (const auto& t : p.terms()) {
        const Mono* m = t.mono;
        // Rewrite v^e -> v^(e-1) + v^(e-2)*(v^2 - v) until multilinear,
        // taking the first offending variable each time.
        while (!m->multilinear()) {
            VarId v = m->factors().front().first;
            std::uint32_t e = 0;
            for (const auto& [w, we] : m->factors()) {
                if (we >= 2) {
                    v = w;
                    e = we;
                    break;
                }
            }
            const Mono* rest = pool.div_var(m, v, e);
            cof[v].push_back({pool.mul_var(rest, v, e - 2), t.coeff});
            m = pool.mul_var(rest, v, e - 1);
        }
        reduced.push_back({m, t.coeff});
    }

    MultilinearDecomp out;
    out.reduced = Poly::from_terms(std::move(reduced));
    for (auto& [v, terms] : cof) {
        Poly c = Poly::from_terms(std::move(terms));
        if (!c.is_zero()) out.cofactors.emplace_back(v, std::move(c));
    }
    return out;
}

}  // namespace semialg
