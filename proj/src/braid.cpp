#include "braidcover/braid.hpp"

#include <algorithm>
#include <cstdlib>

namespace braidcover {

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i > n - 1) throw DomainError("transposition index out of range");
    Permutation p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Permutation Permutation::then(const Permutation& next) const {
    if (degree() != next.degree()) throw DomainError("permutation degree mismatch");
    Permutation r(degree());
    for (int i = 0; i < degree(); ++i) r.img_[i] = next.img_[img_[i]];
    return r;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(img_.size(), false);
    int count = 0;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (int j = i; !seen[j]; j = img_[j]) seen[j] = true;
    }
    return count;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lengths;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw DomainError("strand count must be at least 1");
    for (int e : letters_) {
        int i = std::abs(e);
        if (i < 1 || i > strands_ - 1)
            throw DomainError("letter index " + std::to_string(e) + " out of range for " +
                              std::to_string(strands_) + " strands");
    }
}

BraidWord BraidWord::inverse() const {
    std::vector<int> inv(letters_.rbegin(), letters_.rend());
    for (int& e : inv) e = -e;
    return BraidWord(strands_, std::move(inv));
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands()) throw DomainError("compose: strand count mismatch");
    std::vector<int> letters(a.letters());
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> out;
    out.reserve(w.length());
    for (int e : w.letters()) {
        if (!out.empty() && out.back() == -e)
            out.pop_back();
        else
            out.push_back(e);
    }
    return BraidWord(w.strands(), std::move(out));
}

BraidWord cyclic_rotate(const BraidWord& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.length();
    std::vector<int> letters(w.letters());
    std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k), letters.end());
    return BraidWord(w.strands(), std::move(letters));
}

long long exponent_sum(const BraidWord& w) {
    long long s = 0;
    for (int e : w.letters()) s += e > 0 ? 1 : -1;
    return s;
}

Permutation permutation(const BraidWord& w) {
    Permutation p(w.strands());
    for (int e : w.letters()) p = p.then(Permutation::transposition(w.strands(), std::abs(e)));
    return p;
}

int closure_component_count(const BraidWord& w) {
    return permutation(w).cycle_count();
}

bool is_positive_word(const BraidWord& w) {
    return std::all_of(w.letters().begin(), w.letters().end(), [](int e) { return e > 0; });
}

BraidWord delta(int strands) {
    std::vector<int> letters;
    for (int i = 1; i < strands; ++i) letters.push_back(i);
    return BraidWord(strands, std::move(letters));
}

BraidWord delta_rev(int strands) {
    std::vector<int> letters;
    for (int i = strands - 1; i >= 1; --i) letters.push_back(i);
    return BraidWord(strands, std::move(letters));
}

BraidWord full_twist(int strands) {
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(strands) * (strands - 1));
    for (int rep = 0; rep < strands; ++rep)
        for (int i = 1; i < strands; ++i) letters.push_back(i);
    return BraidWord(strands, std::move(letters));
}

BraidWord beta_family(int n, int m) {
    if (n < 1) throw DomainError("beta family needs n >= 1");
    if (m < 1) throw DomainError("beta family needs m >= 1");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(2 * m - 1) * (n - 1));
    for (int rep = 0; rep < m - 1; ++rep) {
        for (int i = 1; i < n; ++i) letters.push_back(i);
        for (int i = n - 1; i >= 1; --i) letters.push_back(i);
    }
    for (int i = 1; i < n; ++i) letters.push_back(i);
    return BraidWord(n, std::move(letters));
}

BraidWord markov_stabilize(const BraidWord& w, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("stabilization sign must be +1 or -1");
    std::vector<int> letters(w.letters());
    letters.push_back(sign * w.strands());
    return BraidWord(w.strands() + 1, std::move(letters));
}

std::optional<BraidWord> markov_destabilize(const BraidWord& w) {
    int top = w.strands() - 1;
    if (top < 1) return std::nullopt;
    std::size_t count = 0;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < w.length(); ++i)
        if (std::abs(w.letters()[i]) == top) {
            ++count;
            pos = i;
        }
    if (count != 1) return std::nullopt;
    std::vector<int> letters;
    letters.reserve(w.length() - 1);
    for (std::size_t i = pos + 1; i < w.length(); ++i) letters.push_back(w.letters()[i]);
    for (std::size_t i = 0; i < pos; ++i) letters.push_back(w.letters()[i]);
    return BraidWord(w.strands() - 1, std::move(letters));
}

} // namespace braidcover
