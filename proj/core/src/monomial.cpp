#include "semialg/monomial.hpp"

#include <algorithm>
#include <charconv>

#include "semialg/errors.hpp"

namespace semialg {

bool Mono::multilinear() const noexcept {
    for (const auto& [v, e] : factors_) {
        if (e > 1) return false;
    }
    return true;
}

bool Mono::contains(VarId v) const noexcept {
    for (const auto& [w, e] : factors_) {
        if (w == v) return true;
    }
    return false;
}

MonoPool& MonoPool::instance() {
    static MonoPool pool;
    return pool;
}

namespace {

std::string render_name(const std::vector<Mono::Factor>& factors) {
    std::string name;
    char buf[36];
    bool first = true;
    for (const auto& [v, e] : factors) {
        if (!first) name += '*';
        first = false;
        std::size_t n = v.write_name(buf);
        if (e > 1) {
            buf[n++] = '^';
            auto r = std::to_chars(buf + n, buf + sizeof(buf), e);
            n = static_cast<std::size_t>(r.ptr - buf);
        }
        name.append(buf, n);
    }
    return name;
}

}  // namespace

const Mono* MonoPool::intern_sorted(std::vector<Mono::Factor> factors) {
    int degree = 0;
    for (const auto& [v, e] : factors) degree += static_cast<int>(e);
    std::string name = render_name(factors);

    std::lock_guard<std::mutex> lock(mu_);
    auto it = by_name_.find(std::string_view(name));
    if (it != by_name_.end()) return it->second.get();
    auto mono = std::unique_ptr<Mono>(new Mono(std::move(factors), degree, std::move(name)));
    const Mono* raw = mono.get();
    by_name_.emplace(std::string_view(raw->name()), std::move(mono));
    return raw;
}

const Mono* MonoPool::constant() {
    return intern_sorted({});
}

const Mono* MonoPool::var(VarId v, std::uint32_t exp) {
    if (exp == 0) return constant();
    return intern_sorted({{v, exp}});
}

const Mono* MonoPool::intern(std::vector<Mono::Factor> factors) {
    std::erase_if(factors, [](const Mono::Factor& f) { return f.second == 0; });
    std::sort(factors.begin(), factors.end(),
              [](const Mono::Factor& a, const Mono::Factor& b) { return a.first < b.first; });
    // Merge duplicates.
    std::vector<Mono::Factor> merged;
    merged.reserve(factors.size());
    for (const auto& f : factors) {
        if (!merged.empty() && merged.back().first == f.first) {
            merged.back().second += f.second;
        } else {
            merged.push_back(f);
        }
    }
    return intern_sorted(std::move(merged));
}

const Mono* MonoPool::mul(const Mono* a, const Mono* b) {
    if (a->is_constant()) return b;
    if (b->is_constant()) return a;
    std::vector<Mono::Factor> out;
    out.reserve(a->factors().size() + b->factors().size());
    auto ia = a->factors().begin(), ea = a->factors().end();
    auto ib = b->factors().begin(), eb = b->factors().end();
    while (ia != ea && ib != eb) {
        if (ia->first == ib->first) {
            out.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        } else if (ia->first < ib->first) {
            out.push_back(*ia++);
        } else {
            out.push_back(*ib++);
        }
    }
    out.insert(out.end(), ia, ea);
    out.insert(out.end(), ib, eb);
    return intern_sorted(std::move(out));
}

const Mono* MonoPool::mul_var(const Mono* a, VarId v, std::uint32_t exp) {
    if (exp == 0) return a;
    std::vector<Mono::Factor> out;
    out.reserve(a->factors().size() + 1);
    bool placed = false;
    for (const auto& f : a->factors()) {
        if (!placed && f.first == v) {
            out.emplace_back(v, f.second + exp);
            placed = true;
        } else if (!placed && v < f.first) {
            out.emplace_back(v, exp);
            out.push_back(f);
            placed = true;
        } else {
            out.push_back(f);
        }
    }
    if (!placed) out.emplace_back(v, exp);
    return intern_sorted(std::move(out));
}

const Mono* MonoPool::div_var(const Mono* a, VarId v, std::uint32_t exp) {
    std::vector<Mono::Factor> out;
    out.reserve(a->factors().size());
    bool found = false;
    for (const auto& f : a->factors()) {
        if (f.first == v) {
            found = true;
            if (f.second < exp) throw Error("monomial division underflow");
            if (f.second > exp) out.emplace_back(v, f.second - exp);
        } else {
            out.push_back(f);
        }
    }
    if (!found && exp > 0) throw Error("monomial division by absent variable");
    return intern_sorted(std::move(out));
}

std::size_t MonoPool::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return by_name_.size();
}

}  // namespace semialg
