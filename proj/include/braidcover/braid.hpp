#pragma once

#include "braidcover/errors.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace braidcover {

// Permutation of {0, ..., n-1}. Composition is in diagram order: (p.then(q))
// applies p first.
class Permutation {
public:
    explicit Permutation(int n) : img_(static_cast<std::size_t>(n)) {
        if (n < 0) throw DomainError("negative permutation degree");
        for (int i = 0; i < n; ++i) img_[i] = i;
    }

    // Transposition of adjacent slots i-1 and i (1 <= i <= n-1).
    static Permutation transposition(int n, int i);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }

    Permutation then(const Permutation& next) const;
    bool is_identity() const;
    int cycle_count() const;

    // Cycle lengths, descending.
    std::vector<int> cycle_type() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }

private:
    std::vector<int> img_;
};

// Word in the Artin generators of the braid group on `strands` strands.
// Letters are signed generator indices: +i for sigma_i, -i for its inverse,
// 1 <= i <= strands-1. The empty word is the identity; strands >= 1, and
// B_1 is the trivial group (no generators, only the empty word).
class BraidWord {
public:
    BraidWord() : strands_(1) {}
    BraidWord(int strands, std::vector<int> letters);

    static BraidWord identity(int strands) { return BraidWord(strands, {}); }

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    BraidWord inverse() const;

    bool operator==(const BraidWord& o) const {
        return strands_ == o.strands_ && letters_ == o.letters_;
    }
    bool operator!=(const BraidWord& o) const { return !(*this == o); }

private:
    int strands_;
    std::vector<int> letters_;
};

// Concatenation; both words must have the same strand count.
BraidWord compose(const BraidWord& a, const BraidWord& b);

// Cancels adjacent inverse pairs until none remain. Idempotent, never
// increases length.
BraidWord free_reduce(const BraidWord& w);

// Cyclic rotation: moves the first k letters (mod length) to the end. The
// result is the conjugate prefix^-1 * w * prefix.
BraidWord cyclic_rotate(const BraidWord& w, std::size_t k);

long long exponent_sum(const BraidWord& w);

// Underlying permutation: strand starting at slot i ends at slot
// permutation(w)(i).
Permutation permutation(const BraidWord& w);

// Number of link components of the braid closure = cycle count of the
// permutation.
int closure_component_count(const BraidWord& w);

bool is_positive_word(const BraidWord& w);

// delta = s1 s2 ... s(n-1); delta_rev = s(n-1) ... s1.
BraidWord delta(int strands);
BraidWord delta_rev(int strands);

// Full twist delta^n, the generator of the center for n >= 3.
BraidWord full_twist(int strands);

// (delta delta_rev)^(m-1) delta on n strands; positive, length (2m-1)(n-1),
// closure always a knot. Requires n >= 1, m >= 1.
BraidWord beta_family(int n, int m);

// Markov stabilization: append s_n^sign on n+1 strands. sign is +1 or -1.
BraidWord markov_stabilize(const BraidWord& w, int sign);

// Markov destabilization: defined when the highest generator s_(n-1) occurs
// exactly once (either sign); the word is rotated so that occurrence is last,
// then it is dropped and the strand count decreases. Returns nullopt when not
// applicable.
std::optional<BraidWord> markov_destabilize(const BraidWord& w);

// Braid expression AST over the grammar
//   expr := term {term}
//   term := atom ["^" signed-int]
//   atom := "s" int | "d" | "dR" | "D2" | "beta(" int "," int ")" | "(" expr ")"
struct BraidExpr {
    enum class Kind { Generator, Delta, DeltaRev, FullTwist, Family, Concat, Power };

    Kind kind = Kind::Concat;
    int a = 0;                        // generator index / family n / power exponent
    int b = 0;                        // family m
    std::vector<BraidExpr> children;  // Concat parts or the single Power base
};

BraidExpr parse_expr(const std::string& text);

// Canonical text form; render(parse_expr(s)) parses back to an identical AST.
std::string render(const BraidExpr& e);

// Instantiates an expression at an explicit strand count. Generator indices
// out of range and family strand mismatches are DomainErrors.
BraidWord flatten(const BraidExpr& e, int strands);

} // namespace braidcover
