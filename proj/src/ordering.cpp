#include "braidcover/ordering.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace braidcover {

namespace {

// Doubly linked word over a node arena. Node 0 is the sentinel, so an empty
// word has nxt[0] == 0. Sign counts per generator index support O(n) purity
// checks.
class Engine {
public:
    Engine(const BraidWord& w, long long step_limit)
        : step_limit_(step_limit), cnt_pos_(w.strands(), 0), cnt_neg_(w.strands(), 0) {
        std::size_t cap = w.length() + 1;
        idx_.reserve(cap);
        sgn_.reserve(cap);
        nxt_.reserve(cap);
        prv_.reserve(cap);
        idx_.push_back(0);
        sgn_.push_back(0);
        nxt_.push_back(0);
        prv_.push_back(0);
        int prev = 0;
        for (int e : w.letters()) {
            int node = alloc(std::abs(e), e > 0 ? 1 : -1);
            prv_[node] = prev;
            nxt_[prev] = node;
            prev = node;
        }
        nxt_[prev] = 0;
        prv_[0] = prev;
    }

    // Runs handle reduction. In early_exit mode stops as soon as the lowest
    // occurring index is sign-pure, which already determines the Dehornoy
    // class: later reductions only create letters at or above the reduced
    // index, so purity at the minimum is stable.
    void run(bool early_exit) {
        if (early_exit && classify_now()) return;
        int cur = nxt_[0];
        while (cur != 0) {
            const int i = idx_[cur];
            const int e = sgn_[cur];
            int p = prv_[cur];
            while (p != 0 && idx_[p] > i) p = prv_[p];
            if (p == 0 || idx_[p] != i || sgn_[p] != -e) {
                cur = nxt_[cur];
                continue;
            }
            if (steps_ == step_limit_)
                throw StepLimitError("handle reduction exceeded step limit", steps_);
            ++steps_;
            const int eo = -e; // opener sign; the handle is s_i^eo ... s_i^-eo
            const int before = prv_[p];
            int x = nxt_[p];
            unlink(p);
            while (x != cur) {
                int nx = nxt_[x];
                if (idx_[x] == i + 1) {
                    // sigma_(i+1)^d -> sigma_(i+1)^-eo sigma_i^d sigma_(i+1)^eo;
                    // the leading letter cancels freely against a trailing
                    // sigma_(i+1)^eo from the previous replacement.
                    int pb = prv_[x];
                    if (pb != before && pb != 0 && idx_[pb] == i + 1 && sgn_[pb] == eo)
                        unlink(pb);
                    else
                        insert_before(x, i + 1, -eo);
                    retype(x, i);
                    insert_before(nx, i + 1, eo);
                }
                x = nx;
            }
            unlink(cur);
            if (early_exit && classify_now()) return;
            cur = nxt_[before];
        }
    }

    // Nonempty pure or empty word -> class; mixed minimum index -> nullopt.
    std::optional<SigmaClass> classify_now() const {
        for (int i = 1; i < static_cast<int>(cnt_pos_.size()); ++i) {
            bool hp = cnt_pos_[i] > 0;
            bool hn = cnt_neg_[i] > 0;
            if (!hp && !hn) continue;
            if (hp && hn) return std::nullopt;
            return SigmaClass{hp ? 1 : -1, i};
        }
        return SigmaClass{0, 0};
    }

    std::vector<int> extract() const {
        std::vector<int> letters;
        for (int x = nxt_[0]; x != 0; x = nxt_[x]) letters.push_back(idx_[x] * sgn_[x]);
        return letters;
    }

    long long steps() const { return steps_; }

private:
    int alloc(int i, int s) {
        int node;
        if (!free_.empty()) {
            node = free_.back();
            free_.pop_back();
            idx_[node] = static_cast<std::int16_t>(i);
            sgn_[node] = static_cast<std::int8_t>(s);
        } else {
            node = static_cast<int>(idx_.size());
            idx_.push_back(static_cast<std::int16_t>(i));
            sgn_.push_back(static_cast<std::int8_t>(s));
            nxt_.push_back(0);
            prv_.push_back(0);
        }
        count(i, s, +1);
        return node;
    }

    void unlink(int x) {
        nxt_[prv_[x]] = nxt_[x];
        prv_[nxt_[x]] = prv_[x];
        count(idx_[x], sgn_[x], -1);
        free_.push_back(x);
    }

    void insert_before(int x, int i, int s) {
        int node = alloc(i, s);
        int p = prv_[x];
        nxt_[p] = node;
        prv_[node] = p;
        nxt_[node] = x;
        prv_[x] = node;
    }

    void retype(int x, int i) {
        count(idx_[x], sgn_[x], -1);
        idx_[x] = static_cast<std::int16_t>(i);
        count(i, sgn_[x], +1);
    }

    void count(int i, int s, int delta) {
        if (s > 0)
            cnt_pos_[i] += delta;
        else
            cnt_neg_[i] += delta;
    }

    long long step_limit_;
    long long steps_ = 0;
    std::vector<std::int16_t> idx_;
    std::vector<std::int8_t> sgn_;
    std::vector<int> nxt_;
    std::vector<int> prv_;
    std::vector<int> free_;
    std::vector<long long> cnt_pos_;
    std::vector<long long> cnt_neg_;
};

SigmaClass classify_word(const BraidWord& w, long long step_limit) {
    Engine eng(free_reduce(w), step_limit);
    eng.run(true);
    auto cls = eng.classify_now();
    if (!cls) throw InternalError("handle reduction ended without a classifiable word");
    return *cls;
}

// base * D2^m with m of either sign, built directly as letters.
BraidWord append_twist_power(const BraidWord& base, long long m) {
    const int n = base.strands();
    std::vector<int> letters(base.letters());
    if (n >= 2 && m != 0) {
        long long reps = m > 0 ? m : -m;
        letters.reserve(letters.size() + static_cast<std::size_t>(reps) * n * (n - 1));
        for (long long r = 0; r < reps; ++r)
            for (int block = 0; block < n; ++block) {
                if (m > 0)
                    for (int i = 1; i < n; ++i) letters.push_back(i);
                else
                    for (int i = n - 1; i >= 1; --i) letters.push_back(-i);
            }
    }
    return BraidWord(n, std::move(letters));
}

// Sign of w relative to D2^m in the Dehornoy order.
SigmaClass classify_vs_twist(const BraidWord& w, long long m, long long step_limit) {
    return classify_word(append_twist_power(w, -m), step_limit);
}

BraidWord power_word(const BraidWord& w, int N) {
    std::vector<int> letters;
    letters.reserve(w.length() * static_cast<std::size_t>(N));
    for (int r = 0; r < N; ++r)
        letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    return BraidWord(w.strands(), std::move(letters));
}

// All rationals with denominator <= bound in [lo, hi], via the Stern-Brocot
// mediant walk between adjacent fractions la/lb < ra/rb.
void collect_rationals(long long la, long long lb, long long ra, long long rb, const Rational& lo,
                       const Rational& hi, long long bound, std::vector<Rational>& out) {
    long long mn = la + ra;
    long long md = lb + rb;
    if (md > bound) return;
    Rational m(mn, md);
    if (lo <= m && m <= hi) out.push_back(m);
    if (m > lo) collect_rationals(la, lb, mn, md, lo, hi, bound, out);
    if (m < hi) collect_rationals(mn, md, ra, rb, lo, hi, bound, out);
}

std::vector<Rational> rationals_in_interval(const Rational& lo, const Rational& hi,
                                            long long bound) {
    // Shift near zero first so the integer spine of the walk stays short. The
    // walk covers the open cones on each side of 0/1, which is checked
    // directly since mediants never reproduce a cone endpoint.
    long long base = lo.floor_times(1);
    Rational slo(lo.num() - base * lo.den(), lo.den());
    Rational shi(hi.num() - base * hi.den(), hi.den());
    std::vector<Rational> shifted;
    Rational zero(0);
    if (slo <= zero && zero <= shi) shifted.push_back(zero);
    collect_rationals(0, 1, 1, 0, slo, shi, bound, shifted);
    collect_rationals(-1, 0, 0, 1, slo, shi, bound, shifted);
    std::vector<Rational> out;
    out.reserve(shifted.size());
    for (const Rational& r : shifted) out.emplace_back(r.num() + base * r.den(), r.den());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

HandleReduction handle_reduce(const BraidWord& w, long long step_limit) {
    Engine eng(free_reduce(w), step_limit);
    eng.run(false);
    BraidWord reduced(w.strands(), eng.extract());
    auto cls = eng.classify_now();
    if (!cls) throw InternalError("handle-free word has mixed signs at its lowest index");
    return HandleReduction{std::move(reduced), *cls, eng.steps()};
}

OrderRel compare_dehornoy(const BraidWord& a, const BraidWord& b, long long step_limit) {
    if (a.strands() != b.strands()) throw DomainError("compare: strand count mismatch");
    SigmaClass cls = classify_word(compose(a.inverse(), b), step_limit);
    if (cls.sign > 0) return OrderRel::Less;
    if (cls.sign < 0) return OrderRel::Greater;
    return OrderRel::Equal;
}

FloorResult dehornoy_floor_detail(const BraidWord& w, long long step_limit) {
    const int n = w.strands();
    BraidWord w0 = free_reduce(w);
    if (n == 1 || w0.empty()) return FloorResult{0, w0.empty()};

    // ok(m) <=> D2^m <= w; monotone decreasing in m. Probes also detect
    // equality, which pins the floor outright.
    bool exact = false;
    long long exact_at = 0;
    auto ok = [&](long long m) {
        SigmaClass cls = classify_vs_twist(w0, m, step_limit);
        if (cls.sign == 0) {
            exact = true;
            exact_at = m;
        }
        return cls.sign >= 0;
    };

    const long long denom = static_cast<long long>(n) * (n - 1);
    long long guess = exponent_sum(w0);
    guess = guess >= 0 ? guess / denom : -((-guess + denom - 1) / denom);

    long long lo, hi;
    if (ok(guess)) {
        if (exact) return FloorResult{exact_at, true};
        lo = guess;
        long long step = 1;
        for (;;) {
            long long probe = lo + step;
            if (!ok(probe)) {
                hi = probe;
                break;
            }
            if (exact) return FloorResult{exact_at, true};
            lo = probe;
            step *= 2;
        }
    } else {
        hi = guess;
        long long step = 1;
        for (;;) {
            long long probe = hi - step;
            if (ok(probe)) {
                if (exact) return FloorResult{exact_at, true};
                lo = probe;
                break;
            }
            hi = probe;
            step *= 2;
        }
    }
    while (hi - lo > 1) {
        long long mid = lo + (hi - lo) / 2;
        if (ok(mid)) {
            if (exact) return FloorResult{exact_at, true};
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return FloorResult{lo, false};
}

long long dehornoy_floor(const BraidWord& w, long long step_limit) {
    return dehornoy_floor_detail(w, step_limit).floor;
}

FdtcEstimate fdtc(const BraidWord& w, int max_power, std::optional<long long> denominator_bound,
                  long long step_limit, int rotation_limit) {
    if (max_power < 1) throw DomainError("fdtc needs max_power >= 1");
    if (denominator_bound && *denominator_bound < 1)
        throw DomainError("fdtc denominator bound must be positive");
    BraidWord w0 = free_reduce(w);
    if (w0.empty()) return FdtcEstimate{Rational(0), Rational(0), Rational(0), 0};

    std::vector<BraidWord> rots;
    rots.push_back(w0);
    {
        std::set<std::vector<int>> seen{w0.letters()};
        for (std::size_t k = 1; k < w0.length() && static_cast<int>(rots.size()) < rotation_limit;
             ++k) {
            BraidWord r = cyclic_rotate(w0, k);
            if (seen.insert(r.letters()).second) rots.push_back(std::move(r));
        }
    }

    std::optional<Rational> lo, hi, pinned;
    int power_used = 0;

    auto found_exact = [&](long long m, int N) {
        Rational v(m, N);
        lo = hi = pinned = v;
        power_used = N;
    };

    for (int N = 1; N <= max_power && !pinned; ++N) {
        for (const BraidWord& rot : rots) {
            BraidWord v = power_word(rot, N);
            if (!lo) {
                FloorResult f = dehornoy_floor_detail(v, step_limit);
                if (f.exact) {
                    found_exact(f.floor, N);
                    break;
                }
                lo = Rational(f.floor, N);
                hi = Rational(f.floor + 1, N);
                power_used = N;
                continue;
            }
            // Endpoint probes: the least grid point above lo and the greatest
            // below-or-at hi. Any outcome sharpens a bound; equality pins.
            long long d = lo->floor_times(N) + 1;
            long long c = hi->ceil_times(N) - 1;
            long long targets[2] = {d, c};
            int ntargets = (c != d) ? 2 : 1;
            for (int ti = 0; ti < ntargets && !pinned; ++ti) {
                long long tval = targets[ti];
                Rational tv(tval, N);
                if (tv > *hi || tv < *lo) continue;
                SigmaClass cls = classify_vs_twist(v, tval, step_limit);
                if (cls.sign == 0) {
                    found_exact(tval, N);
                    break;
                }
                if (cls.sign > 0 && tv > *lo) {
                    lo = tv;
                    power_used = N;
                } else if (cls.sign < 0 && tv < *hi) {
                    hi = tv;
                    power_used = N;
                }
                if (*lo == *hi) {
                    pinned = *lo;
                    power_used = N;
                }
            }
            if (pinned) break;
        }
    }

    if (!lo || !hi) throw InternalError("fdtc produced no bounds");
    if (*hi < *lo) throw InternalError("fdtc bounds crossed");
    if (!pinned && denominator_bound) {
        std::vector<Rational> cands = rationals_in_interval(*lo, *hi, *denominator_bound);
        if (cands.size() == 1) pinned = cands.front();
    }
    return FdtcEstimate{*lo, *hi, pinned, power_used};
}

FdtcEstimate bh_fdtc(const FdtcEstimate& e, int strands) {
    if (strands % 2 == 0)
        throw DomainError("Birman-Hilden halving requires an odd strand count");
    FdtcEstimate r;
    r.lower = e.lower.half();
    r.upper = e.upper.half();
    if (e.pinned) r.pinned = e.pinned->half();
    r.power_used = e.power_used;
    return r;
}

} // namespace braidcover
