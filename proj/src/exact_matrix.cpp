#include "braidcover/exact_matrix.hpp"

#include <cstdlib>

namespace braidcover {

namespace {

void row_swap(IntMatrix& a, IntMatrix& u, int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(r1, j), u.at(r2, j));
}

void col_swap(IntMatrix& a, IntMatrix& v, int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, c1), v.at(i, c2));
}

// row r1 += q * row r2
void row_axpy(IntMatrix& a, IntMatrix& u, int r1, int r2, const BigInt& q) {
    for (int j = 0; j < a.cols(); ++j) a.at(r1, j) += q * a.at(r2, j);
    for (int j = 0; j < u.cols(); ++j) u.at(r1, j) += q * u.at(r2, j);
}

// col c1 += q * col c2
void col_axpy(IntMatrix& a, IntMatrix& v, int c1, int c2, const BigInt& q) {
    for (int i = 0; i < a.rows(); ++i) a.at(i, c1) += q * a.at(i, c2);
    for (int i = 0; i < v.rows(); ++i) v.at(i, c1) += q * v.at(i, c2);
}

void row_negate(IntMatrix& a, IntMatrix& u, int r) {
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
    for (int j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
}

// Smallest-magnitude nonzero entry of the trailing submatrix, ties broken by
// lowest row then lowest column. Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& a, int s, int& pi, int& pj) {
    bool found = false;
    BigInt best = 0;
    for (int i = s; i < a.rows(); ++i)
        for (int j = s; j < a.cols(); ++j) {
            const BigInt& x = a.at(i, j);
            if (x == 0) continue;
            BigInt ax = abs_val(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const int r = m.rows();
    const int c = m.cols();
    IntMatrix a(m);
    IntMatrix u = IntMatrix::identity(r);
    IntMatrix v = IntMatrix::identity(c);
    const int k = r < c ? r : c;

    for (int s = 0; s < k; ++s) {
        int pi = 0, pj = 0;
        if (!find_pivot(a, s, pi, pj)) break;
        row_swap(a, u, s, pi);
        col_swap(a, v, s, pj);

        // Reduce until the pivot is alone in its row and column and divides
        // the whole trailing submatrix. Every restart strictly shrinks the
        // pivot magnitude, so this terminates.
        for (;;) {
            bool restart = false;

            for (int i = s + 1; i < r && !restart; ++i) {
                if (a.at(i, s) == 0) continue;
                BigInt q = a.at(i, s) / a.at(s, s);
                if (q != 0) row_axpy(a, u, i, s, -q);
                if (a.at(i, s) != 0) {
                    row_swap(a, u, s, i);
                    restart = true;
                }
            }
            if (restart) continue;

            for (int j = s + 1; j < c && !restart; ++j) {
                if (a.at(s, j) == 0) continue;
                BigInt q = a.at(s, j) / a.at(s, s);
                if (q != 0) col_axpy(a, v, j, s, -q);
                if (a.at(s, j) != 0) {
                    col_swap(a, v, s, j);
                    restart = true;
                }
            }
            if (restart) continue;

            bool fixed = false;
            for (int i = s + 1; i < r && !fixed; ++i)
                for (int j = s + 1; j < c && !fixed; ++j)
                    if (a.at(i, j) % a.at(s, s) != 0) {
                        row_axpy(a, u, s, i, BigInt(1));
                        fixed = true;
                    }
            if (!fixed) break;
        }

        if (a.at(s, s) < 0) row_negate(a, u, s);
    }

    SmithResult res{std::vector<BigInt>(), std::move(u), std::move(v)};
    res.diagonal.reserve(k);
    for (int i = 0; i < k; ++i) res.diagonal.push_back(a.at(i, i));
    return res;
}

} // namespace braidcover
