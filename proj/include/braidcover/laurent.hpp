#pragma once

#include "braidcover/bigint.hpp"

#include <map>
#include <string>

namespace braidcover {

// Laurent polynomial in one variable t with BigInt coefficients, stored as a
// sparse exponent -> coefficient map that never holds zero coefficients.
// Value type; all arithmetic is exact.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(BigInt constant);
    LaurentPoly(BigInt coeff, int exponent);

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(BigInt(1)); }
    static LaurentPoly t(int exponent = 1) { return LaurentPoly(BigInt(1), exponent); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // Exponent range; both require a nonzero polynomial.
    int min_exp() const;
    int max_exp() const;

    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coeff(int exponent) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Multiply by t^k.
    LaurentPoly shifted(int k) const;

    BigInt eval_at_minus1() const;

    // Exact division. Divisor must be nonzero (DomainError) and must divide
    // exactly (InternalError otherwise: callers only reach this when exactness
    // is a theorem, so failure means a convention bug).
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    // Multiplies by +-t^k so that the result q satisfies q(t) = q(1/t) and has
    // positive leading coefficient. Throws InternalError when no unit multiple
    // is symmetric.
    LaurentPoly normalize_symmetric() const;

    // Exponents descending, unit coefficients elided: "t^4 - 3*t^2 + 1 - t^-2".
    // The zero polynomial renders as "0".
    std::string str() const;

private:
    void add_term(int exponent, const BigInt& c);

    std::map<int, BigInt> terms_;
};

// 1 + t + ... + t^(n-1).
LaurentPoly geometric_sum(int n);

} // namespace braidcover
