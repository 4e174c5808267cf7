#include "famc/rational.hpp"

#include <numeric>

#include "famc/errors.hpp"

namespace famc {

namespace {

using i128 = __int128;

long long narrow(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
        throw OverflowError(std::string("rational overflow in ") + what);
    }
    return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(i128 n, i128 d, const char* what) {
    if (d == 0) throw OverflowError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n, what), narrow(d, what));
}

}  // namespace

Rational::Rational(long long n, long long d) : num_(0), den_(1) {
    i128 nn = n;
    i128 dd = d;
    if (dd == 0) throw OverflowError("rational with zero denominator");
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    const i128 g = gcd128(nn, dd);
    if (g > 1) {
        nn /= g;
        dd /= g;
    }
    num_ = narrow(nn, "construction");
    den_ = narrow(dd, "construction");
}

Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_, "addition");
}

Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_, "subtraction");
}

Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_, "multiplication");
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw OverflowError("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_, "division");
}

bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace famc
