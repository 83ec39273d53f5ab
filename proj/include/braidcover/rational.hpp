#pragma once

#include "braidcover/errors.hpp"

#include <numeric>
#include <string>

namespace braidcover {

// Exact rational with 64-bit numerator/denominator, always in lowest terms,
// denominator > 0. Comparisons go through 128-bit cross products, so no
// intermediate overflow for the magnitudes that arise here (floors of braid
// words and small denominators).
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(long long num, long long den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational half() const { return Rational(num_, 2 * den_); }

    // Largest integer m with m/n <= *this, i.e. floor(num * n / den).
    long long floor_times(long long n) const {
        __int128 p = static_cast<__int128>(num_) * n;
        __int128 q = den_;
        __int128 f = p / q;
        if (p % q != 0 && p < 0) f -= 1;
        return static_cast<long long>(f);
    }

    // Smallest integer m with m/n >= *this.
    long long ceil_times(long long n) const {
        __int128 p = static_cast<__int128>(num_) * n;
        __int128 q = den_;
        __int128 c = p / q;
        if (p % q != 0 && p > 0) c += 1;
        return static_cast<long long>(c);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    long long num_;
    long long den_;
};

} // namespace braidcover
