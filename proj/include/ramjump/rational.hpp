#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ramjump/errors.hpp"

namespace ramjump {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision integer parts, kept reduced with a
// positive denominator.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {} // NOLINT: implicit on purpose
    Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    long long num_ll() const { return checked_ll(num_); }
    long long den_ll() const { return checked_ll(den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) raise(ErrorCode::DivisionByZero, "rational division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    BigInt num_, den_;

    void reduce() {
        if (den_ == 0) raise(ErrorCode::DivisionByZero, "zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    static long long checked_ll(const BigInt& v) {
        if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
            raise(ErrorCode::InvalidInput, "rational part out of 64-bit range");
        return v.convert_to<long long>();
    }
};

inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

} // namespace ramjump
