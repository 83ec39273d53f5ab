#include "braidcover/braid.hpp"
#include "braidcover/burau.hpp"
#include "braidcover/errors.hpp"
#include "braidcover/ordering.hpp"

#include <doctest.h>

#include <random>

using namespace braidcover;

namespace {

BraidWord random_word(std::mt19937& rng, int strands, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> idx(1, strands - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<int> letters;
    int l = len(rng);
    for (int i = 0; i < l; ++i) letters.push_back(sgn(rng) ? idx(rng) : -idx(rng));
    return BraidWord(strands, letters);
}

// A word is handle-free when, for every index i, consecutive occurrences of
// +-i with opposite signs are separated by some letter of smaller index.
bool handle_free(const BraidWord& w) {
    const auto& ls = w.letters();
    for (std::size_t a = 0; a < ls.size(); ++a) {
        int i = std::abs(ls[a]);
        for (std::size_t b = a + 1; b < ls.size(); ++b) {
            int j = std::abs(ls[b]);
            if (j < i) break;
            if (j == i) {
                if (ls[b] == -ls[a]) return false;
                break;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("handle reduction output is handle free and equivalent") {
    std::mt19937 rng(43);
    for (int n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            BraidWord w = random_word(rng, n, 14);
            HandleReduction r = handle_reduce(w);
            CHECK(handle_free(r.word));
            // Reduction moves within the group: Burau images agree.
            CHECK(burau_word(r.word) == burau_word(w));
            // Idempotent: a handle-free word reduces in zero steps.
            HandleReduction again = handle_reduce(r.word);
            CHECK(again.steps == 0);
            CHECK(again.word == r.word);
        }
    }
}

TEST_CASE("classification of simple words") {
    HandleReduction r = handle_reduce(BraidWord(3, {1, -1}));
    CHECK(r.cls.sign == 0);
    CHECK(r.word.empty());

    r = handle_reduce(BraidWord(3, {2, 1, 2}));
    CHECK(r.cls.sign == 1);
    CHECK(r.cls.main_index == 1);

    r = handle_reduce(BraidWord(3, {-2}));
    CHECK(r.cls.sign == -1);
    CHECK(r.cls.main_index == 2);

    // A braid relation instance: s1 s2 s1 (s2 s1 s2)^-1 is trivial.
    BraidWord lhs(3, {1, 2, 1});
    BraidWord rhs(3, {2, 1, 2});
    r = handle_reduce(compose(lhs, rhs.inverse()));
    CHECK(r.cls.sign == 0);
    CHECK(r.word.empty());
}

// The reduced Burau representation is faithful on three strands, so it
// decides triviality independently of the combinatorics.
TEST_CASE("triviality matches burau on three strands") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 500; ++trial) {
        BraidWord w = random_word(rng, 3, 16);
        bool trivial = handle_reduce(w).cls.sign == 0;
        bool burau_trivial = burau_word(w) == PolyMatrix::identity(2);
        CHECK(trivial == burau_trivial);
    }
}

TEST_CASE("order properties") {
    std::mt19937 rng(53);
    BraidWord id3 = BraidWord::identity(3);
    for (int trial = 0; trial < 80; ++trial) {
        BraidWord a = random_word(rng, 4, 10);
        BraidWord b = random_word(rng, 4, 10);
        OrderRel ab = compare_dehornoy(a, b);
        OrderRel ba = compare_dehornoy(b, a);
        if (ab == OrderRel::Less) CHECK(ba == OrderRel::Greater);
        if (ab == OrderRel::Greater) CHECK(ba == OrderRel::Less);
        if (ab == OrderRel::Equal) CHECK(ba == OrderRel::Equal);
        CHECK(compare_dehornoy(a, a) == OrderRel::Equal);
        // Left invariance: ca vs cb sorts the same way.
        BraidWord c = random_word(rng, 4, 6);
        CHECK(compare_dehornoy(compose(c, a), compose(c, b)) == ab);
    }
    CHECK(compare_dehornoy(delta(3), id3) == OrderRel::Greater);
    CHECK(compare_dehornoy(delta(3).inverse(), id3) == OrderRel::Less);
    CHECK_THROWS_AS(compare_dehornoy(id3, BraidWord::identity(4)), DomainError);
}

TEST_CASE("floor of full twist powers is exact") {
    BraidWord d2 = full_twist(3);
    BraidWord w = BraidWord::identity(3);
    for (int k = 0; k <= 3; ++k) {
        FloorResult f = dehornoy_floor_detail(w);
        CHECK(f.floor == k);
        CHECK(f.exact);
        w = compose(w, d2);
    }
    BraidWord v = d2.inverse();
    for (int k = 1; k <= 3; ++k) {
        FloorResult f = dehornoy_floor_detail(v);
        CHECK(f.floor == -k);
        CHECK(f.exact);
        v = compose(v, d2.inverse());
    }
}

TEST_CASE("floor examples") {
    CHECK(dehornoy_floor(delta(3)) == 0);
    CHECK(dehornoy_floor(delta(3).inverse()) == -1);
    CHECK(dehornoy_floor(beta_family(3, 4)) == 3);
    CHECK(dehornoy_floor(BraidWord::identity(1)) == 0);
}

TEST_CASE("floor translation and quasimorphism defect") {
    std::mt19937 rng(59);
    BraidWord d2 = full_twist(4);
    for (int trial = 0; trial < 60; ++trial) {
        BraidWord a = random_word(rng, 4, 8);
        BraidWord b = random_word(rng, 4, 8);
        long long fa = dehornoy_floor(a);
        long long fb = dehornoy_floor(b);
        long long fab = dehornoy_floor(compose(a, b));
        CHECK(fa + fb <= fab);
        CHECK(fab <= fa + fb + 1);
        CHECK(dehornoy_floor(compose(a, d2)) == fa + 1);
        CHECK(dehornoy_floor(compose(d2.inverse(), a)) == fa - 1);
    }
}

TEST_CASE("fdtc pins standard values") {
    FdtcEstimate e = fdtc(full_twist(3));
    REQUIRE(e.pinned.has_value());
    CHECK(*e.pinned == Rational(1));

    e = fdtc(delta(3));
    REQUIRE(e.pinned.has_value());
    CHECK(*e.pinned == Rational(1, 3));

    e = fdtc(delta(5));
    REQUIRE(e.pinned.has_value());
    CHECK(*e.pinned == Rational(1, 5));

    e = fdtc(BraidWord(3, {-1, -2, -1, -2, -1, -2}));
    REQUIRE(e.pinned.has_value());
    CHECK(*e.pinned == Rational(-1));

    e = fdtc(BraidWord::identity(3));
    REQUIRE(e.pinned.has_value());
    CHECK(*e.pinned == Rational(0));
}

TEST_CASE("fdtc of the twisted family") {
    // (delta deltaR)^(m-1) delta has coefficient m - 1 for m >= 2.
    for (int m = 2; m <= 4; ++m) {
        FdtcEstimate e = fdtc(beta_family(3, m));
        REQUIRE(e.pinned.has_value());
        CHECK(*e.pinned == Rational(m - 1));
    }
    FdtcEstimate e = fdtc(beta_family(5, 3));
    REQUIRE(e.pinned.has_value());
    CHECK(*e.pinned == Rational(2));
}

TEST_CASE("fdtc enclosure always brackets the pinned value") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        BraidWord w = random_word(rng, 3, 8);
        FdtcEstimate e = fdtc(w, 6, 12);
        CHECK(e.lower <= e.upper);
        if (e.pinned) {
            CHECK(e.lower <= *e.pinned);
            CHECK(*e.pinned <= e.upper);
        }
    }
}

TEST_CASE("fdtc conjugation invariance") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        BraidWord w = beta_family(3, 3);
        BraidWord c = random_word(rng, 3, 6);
        BraidWord conj = compose(compose(c.inverse(), w), c);
        FdtcEstimate e = fdtc(conj);
        REQUIRE(e.pinned.has_value());
        CHECK(*e.pinned == Rational(2));
    }
}

TEST_CASE("birman hilden halving") {
    FdtcEstimate e = fdtc(full_twist(5));
    REQUIRE(e.pinned.has_value());
    FdtcEstimate h = bh_fdtc(e, 5);
    CHECK(*h.pinned == Rational(1, 2));
    CHECK(h.lower == e.lower.half());
    CHECK(h.upper == e.upper.half());
    CHECK_THROWS_AS(bh_fdtc(e, 4), DomainError);
}

TEST_CASE("step limit is enforced") {
    // Forcing many handle rewrites with a tiny budget must throw, not hang.
    BraidWord w(4, {1, 2, 3, -1, -2, -3, 1, 2, 3, -1, -2, -3, 1, 2, 3});
    CHECK_THROWS_AS(handle_reduce(w, 2), StepLimitError);
    try {
        handle_reduce(w, 2);
    } catch (const StepLimitError& e) {
        // Reports the rewrites performed before giving up.
        CHECK(e.steps() == 2);
    }
}
