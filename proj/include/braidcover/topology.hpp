#pragma once

#include "braidcover/braid.hpp"
#include "braidcover/burau.hpp"
#include "braidcover/laurent.hpp"
#include "braidcover/ordering.hpp"

#include <optional>
#include <vector>

namespace braidcover {

// Page of the open book that the double branched cover of a braided link
// inherits: the double cover of the disk branched over n points.
struct Page {
    int strands = 0;
    int genus = 0;
    int boundary_components = 0;
    int euler_characteristic = 0;
};

// n odd: genus (n-1)/2, one boundary component; n even: genus (n-2)/2, two.
// Euler characteristic 2 - n either way.
Page page_of(int strands);

// A positive braid word is a Stein fillability witness for the cover's
// contact structure.
bool stein_witness(const BraidWord& w);

// |H1| of the double branched cover of the closure, which must be a knot on
// an odd number of strands: |det(I - burau_at_minus1(w))|. A return of 0
// would encode infinite H1 but cannot occur for knot closures.
BigInt h1_order(const BraidWord& w);

struct FdtcOptions {
    int max_power = 6;
    // Denominator bound for pinning; defaults to 4 * strands at use site.
    std::optional<long long> denominator_bound;
    long long step_limit = kDefaultStepLimit;
    int rotation_limit = 256;
};

struct OpenBookReport {
    BraidWord word;
    Page page;
    // The binding is the lift of the braid axis, one circle per page
    // boundary component: connected exactly for odd strand counts.
    bool binding_connected = false;
    bool stein = false;
    // Cover-side FDTC (Birman-Hilden halved); requires odd strand count and
    // is absent on step-limit exhaustion.
    std::optional<FdtcEstimate> fdtc_cover;
    // Present when the closure is a knot and the strand count is odd.
    std::optional<BigInt> h1;
};

OpenBookReport open_book_report(const BraidWord& w, const FdtcOptions& opts = {});

// One row of the determinant table: both index orders of the family word
// against the predicted value 4k^2 + 4k - 1.
struct DeterminantTableRow {
    int k = 0;
    BigInt det_a;      // beta(2k+1, 2k+3)
    BigInt det_b;      // beta(2k+3, 2k+1)
    BigInt predicted;  // 4k^2 + 4k - 1
    bool pass = false;
};

std::vector<DeterminantTableRow> verify_prop41(int k_max);

// Two open books with pages of genus k+1 and k carrying the same double
// branched cover: beta(2k+3, 2k+1) and beta(2k+1, 2k+3). The verdict checks
// the structural claims (genus pair, positivity, equal determinant and
// Alexander polynomial); FDTC estimates ride along as data with the family
// values 2k and 2k+2 halved to k and k+1 recorded for k >= 1.
struct Theorem12Report {
    int k = 0;
    OpenBookReport high_genus;  // beta(2k+3, 2k+1)
    OpenBookReport low_genus;   // beta(2k+1, 2k+3)
    LaurentPoly alexander_high;
    LaurentPoly alexander_low;
    bool genus_ok = false;
    bool both_stein = false;
    bool equal_determinant = false;
    bool equal_alexander = false;
    bool pass = false;
    std::optional<Rational> fdtc_expected_high;  // k, for k >= 1
    std::optional<Rational> fdtc_expected_low;   // k+1, for k >= 1
    std::optional<bool> fdtc_consistent;
};

Theorem12Report theorem12_report(int k, const FdtcOptions& opts = {});

} // namespace braidcover
