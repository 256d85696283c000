#include "semialg/system_io.hpp"

#include <cctype>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "semialg/errors.hpp"

namespace semialg {

namespace {

struct LineScanner {
    std::string_view s;
    std::size_t pos = 0;
    std::size_t line_no;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(line_no, pos + 1, why);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long long integer() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
            fail("expected a number");
        }
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            if (v > (std::numeric_limits<long long>::max() - 9) / 10) fail("number too large");
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }
    bool keyword(std::string_view word) {
        skip_ws();
        if (s.compare(pos, word.size(), word) == 0) {
            pos += word.size();
            return true;
        }
        return false;
    }
};

std::uint32_t reduce_mod(long long v, std::uint64_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint32_t>(r);
}

}  // namespace

LinSystemFp parse_system(std::istream& is) {
    std::optional<std::uint64_t> field;
    std::optional<std::uint32_t> vars;
    std::optional<LinSystemFp> sys;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        LineScanner sc{raw, 0, line_no};
        if (sc.done() || sc.peek() == '#') continue;

        if (!field) {
            if (!sc.keyword("field")) sc.fail("expected 'field <p>'");
            const long long p = sc.integer();
            if (!sc.done()) sc.fail("trailing input after field");
            if (p < 2) sc.fail("field must be at least 2");
            field = static_cast<std::uint64_t>(p);
            continue;
        }
        if (!vars) {
            if (!sc.keyword("vars")) sc.fail("expected 'vars <n>'");
            const long long n = sc.integer();
            if (!sc.done()) sc.fail("trailing input after vars");
            if (n < 1 || n > (1 << 20)) sc.fail("variable count out of range");
            vars = static_cast<std::uint32_t>(n);
            sys.emplace(*field, *vars);  // throws on a non-prime field
            continue;
        }

        // Equation line. Either "0 = b" or a sum of coefficient*variable terms.
        std::vector<std::uint32_t> coeffs(*vars, 0);
        bool first = true;
        for (;;) {
            long long sign = 1;
            if (!first || sc.peek() == '-' || sc.peek() == '+') {
                if (sc.consume('-')) {
                    sign = -1;
                } else if (!sc.consume('+') && !first) {
                    sc.fail("expected '+' or '-' between terms");
                }
            }
            long long coeff = 1;
            bool explicit_zero = false;
            if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
                coeff = sc.integer();
                if (sc.consume('*')) {
                    // coefficient times variable
                } else if (first && coeff == 0 && sc.peek() == '=') {
                    explicit_zero = true;  // the empty-sum row "0 = b"
                } else if (sc.peek() != 'x') {
                    sc.fail("expected '*' or a variable after the coefficient");
                }
            }
            if (!explicit_zero) {
                if (sc.peek() != 'x') sc.fail("expected a variable");
                ++sc.pos;
                const long long idx = sc.integer();
                if (idx < 1 || static_cast<std::uint64_t>(idx) > *vars) {
                    sc.fail("variable index out of range");
                }
                const std::uint32_t col = static_cast<std::uint32_t>(idx - 1);
                const std::uint64_t p = *field;
                coeffs[col] = static_cast<std::uint32_t>(
                    (coeffs[col] + reduce_mod(sign * coeff, p)) % p);
            }
            first = false;
            if (sc.peek() == '=') {
                ++sc.pos;
                break;
            }
        }
        const long long rhs = sc.integer();
        if (!sc.done()) sc.fail("trailing input after equation");
        sys->add_row(std::move(coeffs), reduce_mod(rhs, *field));
    }
    if (!sys) {
        throw ParseError(line_no, 1, "missing 'field' / 'vars' header");
    }
    return std::move(*sys);
}

LinSystemFp parse_system(const std::string& text) {
    std::istringstream is(text);
    return parse_system(is);
}

void write_system(std::ostream& os, const LinSystemFp& sys) {
    os << "field " << sys.p() << '\n';
    os << "vars " << sys.var_count() << '\n';
    for (const auto& row : sys.rows()) {
        bool first = true;
        for (std::uint32_t i = 0; i < sys.var_count(); ++i) {
            if (row.coeffs[i] == 0) continue;
            if (!first) os << " + ";
            os << row.coeffs[i] << "*x" << (i + 1);
            first = false;
        }
        if (first) os << "0";
        os << " = " << row.rhs << '\n';
    }
}

std::string system_to_string(const LinSystemFp& sys) {
    std::ostringstream os;
    write_system(os, sys);
    return os.str();
}

}  // namespace semialg
