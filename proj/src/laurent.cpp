#include "braidcover/laurent.hpp"

#include "braidcover/errors.hpp"

#include <utility>

namespace braidcover {

LaurentPoly::LaurentPoly(BigInt constant) {
    if (constant != 0) terms_.emplace(0, std::move(constant));
}

LaurentPoly::LaurentPoly(BigInt coeff, int exponent) {
    if (coeff != 0) terms_.emplace(exponent, std::move(coeff));
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw DomainError("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw DomainError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

BigInt LaurentPoly::eval_at_minus1() const {
    BigInt v = 0;
    for (const auto& [e, c] : terms_) {
        if (e % 2 == 0)
            v += c;
        else
            v -= c;
    }
    return v;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("division by zero polynomial");
    if (is_zero()) return LaurentPoly();

    // Long division by leading terms; exactness means the remainder hits zero.
    // Any exact quotient exponent is >= qmin, which bounds the loop: without
    // that guard a non-exact division would recede into a Laurent series.
    LaurentPoly rem(*this);
    LaurentPoly quot;
    const int dlead = divisor.max_exp();
    const BigInt& dc = divisor.terms().rbegin()->second;
    const int qmin = min_exp() - divisor.min_exp();
    while (!rem.is_zero()) {
        int rlead = rem.max_exp();
        const BigInt& rc = rem.terms_.rbegin()->second;
        if (rc % dc != 0) throw InternalError("divide_exact: leading coefficient not divisible");
        if (rlead - dlead < qmin) throw InternalError("divide_exact: remainder never vanishes");
        LaurentPoly term(rc / dc, rlead - dlead);
        quot += term;
        rem -= term * divisor;
    }
    return quot;
}

LaurentPoly LaurentPoly::normalize_symmetric() const {
    if (is_zero()) return LaurentPoly();
    int lo = min_exp();
    int hi = max_exp();
    if ((lo + hi) % 2 != 0)
        throw InternalError("normalize_symmetric: exponent span is odd, no symmetric unit multiple");
    int shift = -(lo + hi) / 2;
    LaurentPoly r = shifted(shift);
    for (const auto& [e, c] : r.terms_)
        if (c != r.coeff(-e)) throw InternalError("normalize_symmetric: coefficients not palindromic");
    if (r.terms_.rbegin()->second < 0) r = -r;
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        bool unit = (a == 1);
        if (!unit || e == 0) s += a.str();
        if (e != 0) {
            if (!unit) s += "*";
            s += e == 1 ? "t" : "t^" + std::to_string(e);
        }
    }
    return s;
}

LaurentPoly geometric_sum(int n) {
    LaurentPoly r;
    for (int j = 0; j < n; ++j) r += LaurentPoly::t(j);
    return r;
}

} // namespace braidcover
