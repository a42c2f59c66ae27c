#pragma once

#include "padiq/error.hpp"
#include "padiq/integer.hpp"

#include <string>

namespace padiq {

// Exact rational in canonical form: sign in {-1,0,+1}, coprime non-negative
// numerator and positive denominator; 0 is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Int& n) : q_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    // parses "a", "-a", "a/b"
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw domain_error("Rational: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw domain_error("Rational: zero denominator");
        q.canonicalize();
        Rational r;
        r.q_ = q;
        return r;
    }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }

    // |numerator| of the canonical form
    Int numerator() const { return abs(Int(q_.get_num())); }
    Int denominator() const { return Int(q_.get_den()); }
    // signed numerator, for arithmetic
    Int signed_numerator() const { return Int(q_.get_num()); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (sgn(b.q_) == 0) throw domain_error("Rational: division by zero");
        return Rational(a.q_ / b.q_);
    }
    Rational operator-() const { return Rational(-q_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    std::string str() const { return q_.get_str(); }

private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    mpq_class q_;
};

}  // namespace padiq
