#ifndef DPG_RATIONAL_HPP
#define DPG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "dpg/errors.hpp"

namespace dpg {

// Exact arbitrary-precision rational. Thin wrapper around GMP's mpq_class
// that keeps the value canonical (lowest terms, positive denominator) and
// owns the "p/q" text format used by every file this library reads or writes.
//
// All arithmetic is exact; there is no rounding anywhere in the system.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(0) {
        // mpq_class has no long long constructor; import the magnitude.
        unsigned long long mag =
            n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
        if (n < 0) z = -z;
        v_ = mpq_class(z);
    }
    Rational(int n) : v_(n) {}
    Rational(long long num, long long den) : v_(Rational(num).v_ / Rational(den).check_nonzero().v_) {}
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p", "p/q", or "-p/q" (whitespace-free). Decimal notation is
    // deliberately rejected: files carry exact rationals only.
    static Rational parse(const std::string& text) {
        if (text.empty()) throw ValidationError("empty rational literal");
        for (char c : text) {
            if (c != '-' && c != '/' && (c < '0' || c > '9'))
                throw ValidationError("bad rational literal: '" + text + "'");
        }
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw ValidationError("bad rational literal: '" + text + "'");
        if (q.get_den() == 0)
            throw ValidationError("zero denominator in rational literal: '" + text + "'");
        q.canonicalize();
        return Rational(q, already_canonical{});
    }

    // "p/q" in lowest terms; integers print without the "/1".
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }
    mpz_class ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    double to_double() const { return v_.get_d(); }

    const mpq_class& mpq() const { return v_; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        o.check_nonzero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_), already_canonical{}); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend Rational abs(const Rational& a) {
        return a.sign() < 0 ? -a : a;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct already_canonical {};
    Rational(const mpq_class& q, already_canonical) : v_(q) {}

    const Rational& check_nonzero() const {
        if (v_ == 0) throw ValidationError("division by zero");
        return *this;
    }

    mpq_class v_;
};

// Decimal rendering for presentation columns: `sig_digits` significant digits,
// round-half-even, fixed notation for moderate magnitudes and e-notation
// otherwise. Deterministic; the exact "p/q" string stays authoritative.
inline std::string decimal_string(const Rational& r, int sig_digits = 12) {
    if (sig_digits < 1) throw ValidationError("sig_digits must be >= 1");
    if (r.is_zero()) return "0";

    const bool negative = r.sign() < 0;
    mpz_class p = r.num();
    if (negative) p = -p;
    const mpz_class q = r.den();

    // Decimal exponent e with 10^e <= p/q < 10^(e+1).
    long e = 0;
    if (p >= q) {
        mpz_class hi = q * 10;
        while (p >= hi) {
            hi *= 10;
            ++e;
        }
    } else {
        mpz_class scaled = p * 10;
        e = -1;
        while (scaled < q) {
            scaled *= 10;
            --e;
        }
    }

    // Round p/q * 10^(sig-1-e) half-even to an integer with sig digits.
    mpz_class num = p, den = q;
    long shift = sig_digits - 1 - e;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
    if (shift >= 0) num *= pow10; else den *= pow10;

    mpz_class digits, rem;
    mpz_fdiv_qr(digits.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const mpz_class twice = 2 * rem;
    if (twice > den || (twice == den && mpz_odd_p(digits.get_mpz_t()))) digits += 1;

    std::string ds = digits.get_str();
    if (static_cast<int>(ds.size()) > sig_digits) {
        // 999.95 -> 1000 case: one extra digit, bump the exponent.
        ds.pop_back();
        ++e;
    }

    std::string out;
    if (e >= -4 && e < 15) {
        if (e >= 0) {
            if (static_cast<long>(ds.size()) <= e) ds.append(e + 1 - ds.size(), '0');
            out = ds.substr(0, e + 1);
            std::string frac = ds.substr(e + 1);
            while (!frac.empty() && frac.back() == '0') frac.pop_back();
            if (!frac.empty()) out += "." + frac;
        } else {
            std::string frac(-e - 1, '0');
            frac += ds;
            while (!frac.empty() && frac.back() == '0') frac.pop_back();
            out = "0." + frac;
        }
    } else {
        std::string mant = ds.substr(0, 1);
        std::string frac = ds.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) mant += "." + frac;
        out = mant + "e" + std::to_string(e);
    }
    return negative ? "-" + out : out;
}

} // namespace dpg

#endif // DPG_RATIONAL_HPP
