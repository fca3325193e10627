#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hca {

// Exact rational scalar on top of GMP. Always in lowest terms with a
// positive denominator; all arithmetic is exact.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(mpz_class(n)) {}
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p", "p/q", optional leading '-'.
    static Rational from_string(const std::string& s);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational pow_int(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("zero to a negative power");
            return Rational(0);
        }
        mpz_class num, den;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), k);
        return e > 0 ? Rational(num, den) : Rational(den, num);
    }

    std::string to_string() const { return q_.get_str(); }

  private:
    mpq_class q_;
};

inline Rational Rational::from_string(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = t.find('/');
    auto check_int = [](const std::string& x) {
        if (x.empty()) throw std::invalid_argument("bad rational literal");
        std::size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
        if (i == x.size()) throw std::invalid_argument("bad rational literal");
        for (; i < x.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(x[i])))
                throw std::invalid_argument("bad rational literal '" + x + "'");
    };
    if (slash == std::string::npos) {
        check_int(t);
        return Rational(mpz_class(t));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    check_int(num);
    check_int(den);
    return Rational(mpz_class(num), mpz_class(den));
}

// n! as an exact integer.
inline mpz_class factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// m!! for odd m >= -3, with (-1)!! = 1 and (-3)!! = -1.
inline mpz_class double_factorial(long m) {
    if (m == -1) return 1;
    if (m == -3) return -1;
    if (m < 0 || m % 2 == 0) throw std::domain_error("double factorial needs odd m >= -3");
    mpz_class r = 1;
    for (long k = m; k >= 1; k -= 2) r *= k;
    return r;
}

inline mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace hca
