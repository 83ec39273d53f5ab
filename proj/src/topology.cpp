#include "braidcover/topology.hpp"

namespace braidcover {

Page page_of(int strands) {
    if (strands < 1) throw DomainError("page needs at least one strand");
    Page p;
    p.strands = strands;
    if (strands % 2 == 1) {
        p.genus = (strands - 1) / 2;
        p.boundary_components = 1;
    } else {
        p.genus = (strands - 2) / 2;
        p.boundary_components = 2;
    }
    p.euler_characteristic = 2 - strands;
    return p;
}

bool stein_witness(const BraidWord& w) {
    return is_positive_word(w);
}

BigInt h1_order(const BraidWord& w) {
    if (w.strands() % 2 == 0)
        throw DomainError("h1_order requires an odd strand count");
    if (closure_component_count(w) != 1)
        throw DomainError("h1_order requires a knot closure");
    IntMatrix diff = IntMatrix::identity(w.strands() - 1) - burau_at_minus1(w);
    return abs_val(diff.det());
}

OpenBookReport open_book_report(const BraidWord& w, const FdtcOptions& opts) {
    OpenBookReport r;
    r.word = w;
    r.page = page_of(w.strands());
    r.binding_connected = r.page.boundary_components == 1;
    r.stein = stein_witness(w);
    if (w.strands() % 2 == 1) {
        long long denom =
            opts.denominator_bound ? *opts.denominator_bound : 4LL * w.strands();
        try {
            FdtcEstimate e =
                fdtc(w, opts.max_power, denom, opts.step_limit, opts.rotation_limit);
            r.fdtc_cover = bh_fdtc(e, w.strands());
        } catch (const StepLimitError&) {
            // Leave the estimate absent; the structural fields stand alone.
        }
        if (closure_component_count(w) == 1) r.h1 = h1_order(w);
    }
    return r;
}

std::vector<DeterminantTableRow> verify_prop41(int k_max) {
    if (k_max < 1) throw DomainError("determinant table needs k_max >= 1");
    std::vector<DeterminantTableRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        DeterminantTableRow row;
        row.k = k;
        row.det_a = knot_determinant(beta_family(2 * k + 1, 2 * k + 3));
        row.det_b = knot_determinant(beta_family(2 * k + 3, 2 * k + 1));
        row.predicted = BigInt(4) * k * k + 4 * k - 1;
        row.pass = row.det_a == row.predicted && row.det_b == row.predicted;
        rows.push_back(std::move(row));
    }
    return rows;
}

Theorem12Report theorem12_report(int k, const FdtcOptions& opts) {
    if (k < 0) throw DomainError("theorem12_report needs k >= 0");
    Theorem12Report r;
    r.k = k;
    BraidWord high = beta_family(2 * k + 3, 2 * k + 1);
    BraidWord low = beta_family(2 * k + 1, 2 * k + 3);
    r.high_genus = open_book_report(high, opts);
    r.low_genus = open_book_report(low, opts);
    r.alexander_high = alexander_polynomial(high);
    r.alexander_low = alexander_polynomial(low);
    r.genus_ok = r.high_genus.page.genus == k + 1 && r.low_genus.page.genus == k;
    r.both_stein = r.high_genus.stein && r.low_genus.stein;
    r.equal_determinant =
        r.high_genus.h1 && r.low_genus.h1 && *r.high_genus.h1 == *r.low_genus.h1;
    r.equal_alexander = r.alexander_high == r.alexander_low;
    r.pass = r.genus_ok && r.both_stein && r.equal_determinant && r.equal_alexander;
    if (k >= 1) {
        r.fdtc_expected_high = Rational(k);
        r.fdtc_expected_low = Rational(k + 1);
        if (r.high_genus.fdtc_cover && r.low_genus.fdtc_cover &&
            r.high_genus.fdtc_cover->pinned && r.low_genus.fdtc_cover->pinned) {
            r.fdtc_consistent = *r.high_genus.fdtc_cover->pinned == *r.fdtc_expected_high &&
                                *r.low_genus.fdtc_cover->pinned == *r.fdtc_expected_low;
        }
    }
    return r;
}

} // namespace braidcover
