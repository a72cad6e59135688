#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

#include "graphcurv/error.hpp"

namespace graphcurv {

// Exact rational number. Always held in canonical form: reduced fraction,
// positive denominator. Backed by GMP so bound computations (e.g. long
// products of vertex-count bound factors) cannot overflow.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(long long n) : q_(from_ll(n)) {}
    Rational(const mpz_class& n) : q_(n) {}

    Rational(long long num, long long den) : q_(from_ll(num)) {
        if (den == 0) raise(errc::invalid_parameter, "rational with zero denominator");
        q_ /= from_ll(den);
    }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) raise(errc::invalid_parameter, "rational with zero denominator");
        q_ = mpq_class(num) / mpq_class(den);
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

    double to_double() const { return q_.get_d(); }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    const mpq_class& mpq() const { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.q_ == 0) raise(errc::invalid_parameter, "division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    static mpq_class from_ll(long long v) {
        // mpz has no long long constructor on LP64-agnostic paths; go via string
        // only when the value does not fit a signed long.
        if (v >= 0) return mpq_class(mpz_class(static_cast<unsigned long>(v)));
        mpz_class m(static_cast<unsigned long>(-(v + 1)));
        m += 1;
        return mpq_class(-m);
    }

    mpq_class q_;
};

inline Rational Rational::parse(std::string_view text) {
    size_t b = text.find_first_not_of(" \t\r\n");
    size_t e = text.find_last_not_of(" \t\r\n");
    if (b == std::string_view::npos) raise(errc::parse_error, "empty rational literal");
    std::string s(text.substr(b, e - b + 1));

    auto digits_ok = [](const std::string& t) {
        size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };

    std::string nums = s, dens = "1";
    if (size_t slash = s.find('/'); slash != std::string::npos) {
        nums = s.substr(0, slash);
        dens = s.substr(slash + 1);
    }
    if (!digits_ok(nums) || !digits_ok(dens))
        raise(errc::parse_error, "bad rational literal '" + s + "'");
    // mpz rejects an explicit plus sign.
    if (nums[0] == '+') nums.erase(0, 1);
    if (dens[0] == '+') dens.erase(0, 1);

    mpz_class num(nums), den(dens);
    if (den == 0) raise(errc::parse_error, "zero denominator in '" + s + "'");
    return Rational(num, den);
}

} // namespace graphcurv
