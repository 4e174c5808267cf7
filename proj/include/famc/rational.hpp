#pragma once

#include <cstdint>
#include <string>

namespace famc {

// Exact rational arithmetic on 64-bit numerator / denominator.
//
// Values are kept canonical: denominator > 0 and gcd(|num|, den) == 1.
// Products and sums widen to 128 bits internally; any result whose reduced
// form does not fit back into 64 bits throws OverflowError.  That is far
// beyond what the constants computed here need (numerators are bounded by
// |G| * maxdeg^3), but the guard keeps failures loud instead of silent.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n, long long d);

    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return double(num_) / double(den_); }

    // "7/3" for proper fractions, "4" for integers, "-1/2" with the sign on
    // the numerator.
    std::string str() const;

private:
    long long num_;
    long long den_;
};

}  // namespace famc
