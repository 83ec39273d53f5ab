#include "braidcover/errors.hpp"
#include "braidcover/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace braidcover;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int max_terms, int exp_range, int coeff_range) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-exp_range, exp_range);
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly(BigInt(coeff(rng)), exp(rng));
    return p;
}

} // namespace

TEST_CASE("laurent basics") {
    LaurentPoly z;
    CHECK(z.is_zero());
    CHECK(z.str() == "0");
    CHECK(LaurentPoly::one().is_one());
    CHECK(LaurentPoly::t().str() == "t");
    CHECK(LaurentPoly::t(-1).str() == "t^-1");

    LaurentPoly p = LaurentPoly::t(2) - LaurentPoly(BigInt(3)) + LaurentPoly(BigInt(2), -1);
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == 2);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(0) == -3);
    CHECK(p.coeff(1) == 0);
    CHECK(p.str() == "t^2 - 3 + 2*t^-1");
}

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly p = LaurentPoly::t(5) - LaurentPoly::t(5);
    CHECK(p.is_zero());
    CHECK(p.terms().empty());

    LaurentPoly q = LaurentPoly(BigInt(2), 1) + LaurentPoly(BigInt(-2), 1) + LaurentPoly::one();
    CHECK(q.terms().size() == 1);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng, 6, 5, 9);
        LaurentPoly b = random_poly(rng, 6, 5, 9);
        LaurentPoly c = random_poly(rng, 6, 5, 9);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == LaurentPoly::zero());
        CHECK(a * LaurentPoly::one() == a);
        CHECK(a + LaurentPoly::zero() == a);
    }
}

TEST_CASE("shift is multiplication by a power of t") {
    LaurentPoly p = LaurentPoly::t(2) + LaurentPoly(BigInt(4), -3);
    CHECK(p.shifted(3) == p * LaurentPoly::t(3));
    CHECK(p.shifted(-2) == p * LaurentPoly::t(-2));
    CHECK(p.shifted(0) == p);
}

TEST_CASE("evaluation at -1") {
    LaurentPoly p = LaurentPoly::t(2) - LaurentPoly::t(1) + LaurentPoly::one();
    CHECK(p.eval_at_minus1() == 3);
    CHECK(LaurentPoly::t(-3).eval_at_minus1() == -1);
    CHECK(LaurentPoly::zero().eval_at_minus1() == 0);
    CHECK(geometric_sum(3).eval_at_minus1() == 1);
    CHECK(geometric_sum(4).eval_at_minus1() == 0);
}

TEST_CASE("exact division recovers cofactors") {
    std::mt19937 rng(11);
    int done = 0;
    while (done < 200) {
        LaurentPoly a = random_poly(rng, 5, 4, 6);
        LaurentPoly b = random_poly(rng, 5, 4, 6);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).divide_exact(b) == a);
        CHECK((a * b).divide_exact(a) == b);
        ++done;
    }
}

TEST_CASE("division errors") {
    LaurentPoly p = LaurentPoly::t(1) + LaurentPoly::one();
    CHECK_THROWS_AS(p.divide_exact(LaurentPoly::zero()), DomainError);
    // t + 1 is not divisible by t - 1.
    CHECK_THROWS_AS(p.divide_exact(LaurentPoly::t(1) - LaurentPoly::one()), InternalError);
    // 1 / (1 + t) has an infinite Laurent tail; division must terminate.
    CHECK_THROWS_AS(LaurentPoly::one().divide_exact(p), InternalError);
}

TEST_CASE("symmetric normalization") {
    // t - 1 + t^-1 is already symmetric.
    LaurentPoly tref = LaurentPoly::t(1) - LaurentPoly::one() + LaurentPoly::t(-1);
    CHECK(tref.normalize_symmetric() == tref);
    // A shifted copy normalizes back.
    CHECK(tref.shifted(4).normalize_symmetric() == tref);
    CHECK((-tref.shifted(-2)).normalize_symmetric() == tref);
    // Constants normalize to a positive constant.
    CHECK(LaurentPoly(BigInt(-5)).normalize_symmetric() == LaurentPoly(BigInt(5)));
    // No unit multiple of t + 2 is symmetric.
    LaurentPoly bad = LaurentPoly::t(1) + LaurentPoly(BigInt(2));
    CHECK_THROWS_AS(bad.normalize_symmetric(), InternalError);
}

TEST_CASE("geometric sum") {
    CHECK(geometric_sum(1) == LaurentPoly::one());
    LaurentPoly g3 = LaurentPoly::one() + LaurentPoly::t(1) + LaurentPoly::t(2);
    CHECK(geometric_sum(3) == g3);
    // (t - 1) * (1 + ... + t^(n-1)) telescopes to t^n - 1.
    LaurentPoly tm1 = LaurentPoly::t(1) - LaurentPoly::one();
    CHECK(tm1 * geometric_sum(5) == LaurentPoly::t(5) - LaurentPoly::one());
}

TEST_CASE("rendering folds signs and elides units") {
    LaurentPoly p = -LaurentPoly::t(3) + LaurentPoly(BigInt(2), 1) - LaurentPoly(BigInt(7));
    CHECK(p.str() == "-t^3 + 2*t - 7");
    CHECK(LaurentPoly(BigInt(-1), -4).str() == "-t^-4");
}
