#include "semialg/rational.hpp"

#include <gmp.h>

#include <bit>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <utility>

#include "semialg/errors.hpp"

namespace semialg {

namespace detail {
struct BigRep {
    mpq_t q;
    BigRep() { mpq_init(q); }
    ~BigRep() { mpq_clear(q); }
    BigRep(const BigRep&) = delete;
    BigRep& operator=(const BigRep&) = delete;
};
}  // namespace detail

using detail::BigRep;
using i128 = __int128;
using u128 = unsigned __int128;

namespace {

constexpr long long kI64Min = std::numeric_limits<long long>::min();
constexpr long long kI64Max = std::numeric_limits<long long>::max();

u128 u128_abs(i128 v) {
    return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
}

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void mpz_set_i128(mpz_t z, i128 v) {
    const u128 a = u128_abs(v);
    mpz_set_ui(z, static_cast<unsigned long>(a >> 64));
    mpz_mul_2exp(z, z, 64);
    mpz_add_ui(z, z, static_cast<unsigned long>(a & ~0ULL));
    if (v < 0) mpz_neg(z, z);
}

struct ScopedMpq {
    mpq_t q;
    ScopedMpq() { mpq_init(q); }
    ~ScopedMpq() { mpq_clear(q); }
};

enum class Op { Add, Sub, Mul, Div };

}  // namespace

namespace detail {

struct RationalOps {
    static Rational small_raw(long long n, long long d) noexcept {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    static Rational make_big(BigRep* rep) noexcept {
        Rational r;
        r.num_ = reinterpret_cast<long long>(rep);
        r.den_ = 0;
        return r;
    }

    // Wraps a canonicalized mpq, demoting when the value fits inline.
    static Rational wrap_mpq(mpq_t q) {
        if (mpz_fits_slong_p(mpq_numref(q)) && mpz_fits_slong_p(mpq_denref(q))) {
            return small_raw(mpz_get_si(mpq_numref(q)), mpz_get_si(mpq_denref(q)));
        }
        auto* rep = new BigRep();
        mpq_set(rep->q, q);
        return make_big(rep);
    }

    // Builds a Rational from a 128-bit fraction; den must be nonzero.
    static Rational from_i128(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) return small_raw(0, 1);
        u128 g = gcd_u128(u128_abs(num), static_cast<u128>(den));
        if (g > 1) {
            const bool neg = num < 0;
            const u128 an = u128_abs(num) / g;
            num = neg ? -static_cast<i128>(an) : static_cast<i128>(an);
            den = static_cast<i128>(static_cast<u128>(den) / g);
        }
        if (num >= kI64Min && num <= kI64Max && den <= kI64Max) {
            return small_raw(static_cast<long long>(num), static_cast<long long>(den));
        }
        auto* rep = new BigRep();
        mpz_set_i128(mpq_numref(rep->q), num);
        mpz_set_i128(mpq_denref(rep->q), den);
        return make_big(rep);  // gcd already removed, mpq is canonical
    }

    static void load_mpq(mpq_t out, const Rational& r) {
        if (r.fits_int64()) {
            mpz_set_si(mpq_numref(out), r.num_);
            mpz_set_si(mpq_denref(out), r.den_);
        } else {
            mpq_set(out, r.big()->q);
        }
    }

    static Rational big_binary(Op op, const Rational& a, const Rational& b) {
        ScopedMpq qa, qb, qr;
        load_mpq(qa.q, a);
        load_mpq(qb.q, b);
        switch (op) {
            case Op::Add: mpq_add(qr.q, qa.q, qb.q); break;
            case Op::Sub: mpq_sub(qr.q, qa.q, qb.q); break;
            case Op::Mul: mpq_mul(qr.q, qa.q, qb.q); break;
            case Op::Div:
                if (mpq_sgn(qb.q) == 0) throw Error("division by zero");
                mpq_div(qr.q, qa.q, qb.q);
                break;
        }
        return wrap_mpq(qr.q);
    }
};

}  // namespace detail

using Ops = detail::RationalOps;

Rational::Rational(long long num, long long den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r = Ops::from_i128(num, den);
    num_ = r.num_;
    den_ = r.den_;
    r.num_ = 0;
    r.den_ = 1;  // disarm: ownership of any big rep moved here
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.is_big()) {
        auto* rep = new BigRep();
        mpq_set(rep->q, o.big()->q);
        num_ = reinterpret_cast<long long>(rep);
    }
}

Rational& Rational::operator=(const Rational& o) {
    if (this == &o) return *this;
    Rational tmp(o);
    return *this = std::move(tmp);
}

Rational& Rational::operator=(Rational&& o) noexcept {
    if (this == &o) return *this;
    if (is_big()) delete big();
    num_ = o.num_;
    den_ = o.den_;
    o.num_ = 0;
    o.den_ = 1;
    return *this;
}

Rational::~Rational() {
    if (is_big()) delete big();
}

void Rational::throw_too_large() {
    throw Error("integer too large for a rational literal");
}

Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw Error("empty rational literal");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    bool saw_digit = false;
    bool saw_slash = false;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] == '/') {
            if (saw_slash || !saw_digit || j + 1 == s.size()) {
                throw Error("malformed rational literal: " + std::string(s));
            }
            saw_slash = true;
            saw_digit = false;
        } else if (s[j] >= '0' && s[j] <= '9') {
            saw_digit = true;
        } else {
            throw Error("malformed rational literal: " + std::string(s));
        }
    }
    if (!saw_digit) throw Error("malformed rational literal: " + std::string(s));
    ScopedMpq q;
    const std::string buf(s);
    if (mpq_set_str(q.q, buf.c_str(), 10) != 0) {
        throw Error("malformed rational literal: " + std::string(s));
    }
    if (mpz_sgn(mpq_denref(q.q)) == 0) throw Error("rational with zero denominator");
    mpq_canonicalize(q.q);
    return Ops::wrap_mpq(q.q);
}

bool Rational::is_integer() const {
    if (!is_big()) return den_ == 1;
    return mpz_cmp_ui(mpq_denref(big()->q), 1) == 0;
}

int Rational::sign() const {
    if (!is_big()) return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1);
    return mpq_sgn(big()->q);
}

unsigned Rational::num_bits() const {
    if (!is_big()) {
        if (num_ == 0) return 0;
        const auto a = static_cast<unsigned long long>(u128_abs(num_));
        return 64u - static_cast<unsigned>(std::countl_zero(a));
    }
    return static_cast<unsigned>(mpz_sizeinbase(mpq_numref(big()->q), 2));
}

unsigned Rational::den_bits() const {
    if (!is_big()) {
        const auto a = static_cast<unsigned long long>(den_);
        return 64u - static_cast<unsigned>(std::countl_zero(a));
    }
    return static_cast<unsigned>(mpz_sizeinbase(mpq_denref(big()->q), 2));
}

std::string Rational::to_string() const {
    if (!is_big()) {
        std::string out = std::to_string(num_);
        if (den_ != 1) {
            out += '/';
            out += std::to_string(den_);
        }
        return out;
    }
    char* s = mpq_get_str(nullptr, 10, big()->q);
    std::string out(s);
    std::free(s);
    return out;
}

Rational Rational::operator-() const {
    if (!is_big()) return Ops::from_i128(-static_cast<i128>(num_), den_);
    auto* rep = new BigRep();
    mpq_neg(rep->q, big()->q);
    return Ops::make_big(rep);
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw Error("reciprocal of zero");
    if (!is_big()) return Ops::from_i128(den_, num_);
    ScopedMpq q;
    mpq_inv(q.q, big()->q);
    return Ops::wrap_mpq(q.q);  // e.g. 1/huge stays big, huge/huge' may demote
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_big() || b.is_big()) return Ops::big_binary(Op::Add, a, b);
    const i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    const i128 d = static_cast<i128>(a.den_) * b.den_;
    return Ops::from_i128(n, d);
}

Rational operator-(const Rational& a, const Rational& b) {
    if (a.is_big() || b.is_big()) return Ops::big_binary(Op::Sub, a, b);
    const i128 n = static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_;
    const i128 d = static_cast<i128>(a.den_) * b.den_;
    return Ops::from_i128(n, d);
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_big() || b.is_big()) return Ops::big_binary(Op::Mul, a, b);
    const i128 n = static_cast<i128>(a.num_) * b.num_;
    const i128 d = static_cast<i128>(a.den_) * b.den_;
    return Ops::from_i128(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("division by zero");
    if (a.is_big() || b.is_big()) return Ops::big_binary(Op::Div, a, b);
    const i128 n = static_cast<i128>(a.num_) * b.den_;
    const i128 d = static_cast<i128>(a.den_) * b.num_;
    return Ops::from_i128(n, d);
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.is_big() && !b.is_big()) return a.num_ == b.num_ && a.den_ == b.den_;
    // Big values never fit in int64 (demotion is eager), so mixed is unequal.
    if (a.is_big() != b.is_big()) return false;
    return mpq_equal(a.big()->q, b.big()->q) != 0;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.is_big() && !b.is_big()) {
        const i128 lhs = static_cast<i128>(a.num_) * b.den_;
        const i128 rhs = static_cast<i128>(b.num_) * a.den_;
        return lhs < rhs   ? std::strong_ordering::less
               : lhs > rhs ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }
    ScopedMpq qa, qb;
    Ops::load_mpq(qa.q, a);
    Ops::load_mpq(qb.q, b);
    const int c = mpq_cmp(qa.q, qb.q);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace semialg
