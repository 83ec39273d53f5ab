#include "braidcover/burau.hpp"

#include <cstdlib>

namespace braidcover {

namespace {

void check_letter(int strands, int letter) {
    int i = std::abs(letter);
    if (i < 1 || i > strands - 1)
        throw DomainError("burau generator index out of range for " + std::to_string(strands) +
                          " strands");
}

// Multiply m in place on the right by the image of one letter. The image
// differs from the identity in row i only (1-based generator index i), so the
// product touches at most three columns of m:
//   sigma_i:   col(i-1) += t * col(i),  col(i+1) += col(i),   col(i) *= -t
//   sigma_i^-: col(i-1) += col(i),      col(i+1) += col(i)/t, col(i) *= -1/t
// (columns outside 1..n-1 are dropped). Column indices here are 0-based.
void apply_letter(PolyMatrix& m, int letter) {
    const int n1 = m.cols();
    const int i = std::abs(letter) - 1;
    const bool pos = letter > 0;
    const LaurentPoly mt = -LaurentPoly::t(pos ? 1 : -1);
    for (int r = 0; r < m.rows(); ++r) {
        const LaurentPoly ci = m.at(r, i);
        if (ci.is_zero()) continue;
        if (i - 1 >= 0) m.at(r, i - 1) += pos ? ci.shifted(1) : ci;
        if (i + 1 < n1) m.at(r, i + 1) += pos ? ci : ci.shifted(-1);
        m.at(r, i) = mt * ci;
    }
}

// Same at t = -1: sigma_i has row i equal to (-1, 1, 1) on columns
// (i-1, i, i+1); its inverse has (1, 1, -1).
void apply_letter_at_minus1(IntMatrix& m, int letter) {
    const int n1 = m.cols();
    const int i = std::abs(letter) - 1;
    const bool pos = letter > 0;
    for (int r = 0; r < m.rows(); ++r) {
        const BigInt ci = m.at(r, i);
        if (ci == 0) continue;
        if (i - 1 >= 0) m.at(r, i - 1) += pos ? -ci : ci;
        if (i + 1 < n1) m.at(r, i + 1) += pos ? ci : -ci;
        // m.at(r, i) stays ci: the diagonal entry -t is 1 at t = -1 for
        // sigma_i, and -1/t is 1 as well for the inverse.
    }
}

} // namespace

PolyMatrix burau_generator(int strands, int letter) {
    check_letter(strands, letter);
    PolyMatrix m = PolyMatrix::identity(strands - 1);
    apply_letter(m, letter);
    return m;
}

PolyMatrix burau_word(const BraidWord& w) {
    PolyMatrix m = PolyMatrix::identity(w.strands() - 1);
    for (int e : w.letters()) apply_letter(m, e);
    return m;
}

IntMatrix burau_at_minus1(const BraidWord& w) {
    IntMatrix m = IntMatrix::identity(w.strands() - 1);
    for (int e : w.letters()) apply_letter_at_minus1(m, e);
    return m;
}

LaurentPoly alexander_polynomial(const BraidWord& w) {
    if (closure_component_count(w) != 1)
        throw DomainError("alexander polynomial requires a knot closure");
    const int n = w.strands();
    if (n == 1) return LaurentPoly::one();
    PolyMatrix diff = PolyMatrix::identity(n - 1) - burau_word(w);
    LaurentPoly num = diff.det();
    if (num.is_zero()) throw InternalError("det(I - Burau) vanished on a knot closure");
    return num.divide_exact(geometric_sum(n)).normalize_symmetric();
}

BigInt knot_determinant(const BraidWord& w) {
    if (closure_component_count(w) != 1)
        throw DomainError("knot determinant requires a knot closure");
    const int n = w.strands();
    if (n % 2 == 1) {
        IntMatrix diff = IntMatrix::identity(n - 1) - burau_at_minus1(w);
        return abs_val(diff.det());
    }
    // Even strand count: 1 + t + ... + t^(n-1) vanishes at t = -1, so go
    // through the Alexander polynomial.
    return abs_val(alexander_polynomial(w).eval_at_minus1());
}

} // namespace braidcover
