#pragma once

#include "braidcover/braid.hpp"
#include "braidcover/exact_matrix.hpp"

namespace braidcover {

// Reduced Burau representation of B_n: (n-1)x(n-1) matrices over Z[t, 1/t],
// with words mapped in reading order, burau_word(ab) = burau_word(a) *
// burau_word(b). The convention is pinned by the images at n = 3, t = -1:
// delta -> [[0, 1], [-1, 1]] and delta_rev -> [[1, 1], [-1, 0]].
//
// letter is a signed generator index, 1 <= |letter| <= n-1.
PolyMatrix burau_generator(int strands, int letter);

PolyMatrix burau_word(const BraidWord& w);

// Image of w under Burau specialized at t = -1, computed directly over the
// integers. Equals burau_word(w) evaluated at -1.
IntMatrix burau_at_minus1(const BraidWord& w);

// Alexander polynomial of the closure of w, which must be a knot:
// det(I - burau_word(w)) / (1 + t + ... + t^(n-1)), normalized so that
// p(t) = p(1/t) with positive leading coefficient. The unknot gives 1.
LaurentPoly alexander_polynomial(const BraidWord& w);

// |Alexander at t = -1| = |H1 of the double branched cover|. Odd strand
// counts avoid the polynomial route entirely: 1 + t + ... + t^(n-1) is 1 at
// t = -1, so the value is |det(I - burau_at_minus1(w))|.
BigInt knot_determinant(const BraidWord& w);

} // namespace braidcover
