#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "semialg/errors.hpp"
#include "semialg/poly.hpp"

namespace semialg {

// Canonical polynomial text:
//   - terms in canonical order, joined by " + " / " - " (sign attached to the
//     first term directly, e.g. "-x1 + 1");
//   - each term "c*m" with c a reduced fraction "a/b" (the "/b" omitted when
//     b = 1, c omitted entirely when |c| = 1 and the monomial is nonempty);
//   - monomials like "x3_2^2*x5_0";
//   - the zero polynomial is "0".
std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool neg = t.coeff.sign() < 0;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        const Rational a = t.coeff.abs();
        if (t.mono->is_constant()) {
            out += a.to_string();
        } else if (a.is_one()) {
            out += t.mono->name();
        } else {
            out += a.to_string();
            out += '*';
            out += t.mono->name();
        }
    }
    return out;
}

namespace {

struct Scanner {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const { throw ParseError(0, pos + 1, why); }

    bool done() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    std::uint64_t digits() {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
        std::uint64_t v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::uint64_t d = static_cast<std::uint64_t>(peek() - '0');
            if (v > (UINT64_MAX - d) / 10) fail("number too large");
            v = v * 10 + d;
            ++pos;
        }
        return v;
    }

    // Unsigned rational literal "a" or "a/b".
    Rational unsigned_rational() {
        const std::size_t start = pos;
        digits();
        if (peek() == '/') {
            ++pos;
            digits();
        }
        return Rational::from_string(s.substr(start, pos - start));
    }

    VarId varname() {
        if (peek() != 'x') fail("expected variable");
        ++pos;
        const std::uint64_t index = digits();
        if (index == 0 || index > UINT32_MAX) fail("bad variable index");
        if (peek() == '_') {
            ++pos;
            const std::uint64_t value = digits();
            if (value > UINT32_MAX) fail("bad indicator value");
            return VarId::indicator(static_cast<std::uint32_t>(index),
                                    static_cast<std::uint32_t>(value));
        }
        return VarId::plain(static_cast<std::uint32_t>(index));
    }

    // One term: coefficient and/or monomial factors.
    Poly::Term term() {
        Rational coeff(1);
        std::vector<Mono::Factor> factors;
        bool saw_coeff = false;
        bool saw_factor = false;
        for (;;) {
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                if (saw_coeff || saw_factor) fail("misplaced number in term");
                coeff = unsigned_rational();
                saw_coeff = true;
            } else if (peek() == 'x') {
                VarId v = varname();
                std::uint64_t exp = 1;
                if (peek() == '^') {
                    ++pos;
                    exp = digits();
                    if (exp == 0 || exp > UINT32_MAX) fail("bad exponent");
                }
                factors.emplace_back(v, static_cast<std::uint32_t>(exp));
                saw_factor = true;
            } else {
                fail("expected coefficient or variable");
            }
            if (peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        return {MonoPool::instance().intern(std::move(factors)), std::move(coeff)};
    }
};

}  // namespace

Poly Poly::parse(std::string_view text) {
    Scanner sc{text};
    sc.skip_ws();
    if (sc.done()) sc.fail("empty polynomial");

    std::vector<Poly::Term> terms;
    bool neg = false;
    if (sc.peek() == '-') {
        neg = true;
        ++sc.pos;
        sc.skip_ws();
    }
    for (;;) {
        Poly::Term t = sc.term();
        if (neg) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        sc.skip_ws();
        if (sc.done()) break;
        if (sc.peek() == '+') {
            neg = false;
        } else if (sc.peek() == '-') {
            neg = true;
        } else {
            sc.fail("expected '+' or '-' between terms");
        }
        ++sc.pos;
        sc.skip_ws();
    }
    return Poly::from_terms(std::move(terms));
}

}  // namespace semialg
