#include "jetpva/linalg.hpp"

#include <algorithm>

namespace jetpva {

int rank_bareiss(QMatrix m) {
    if (m.empty() || m[0].empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();

    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (size_t i = 0; i < rows; ++i) {
        Integer l = 1;
        for (size_t j = 0; j < cols; ++j) {
            Integer den = m[i][j].get_den();
            l = l / gcd(l, den) * den;
        }
        for (size_t j = 0; j < cols; ++j) {
            Rational v = m[i][j] * Rational(l);
            a[i][j] = v.get_num();
        }
    }

    Integer prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

RrefResult rref(QMatrix m) {
    RrefResult res;
    if (m.empty()) return res;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rational inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        res.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    res.mat = std::move(m);
    return res;
}

QMatrix kernel_basis(const QMatrix& m, int ncols) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;

    QMatrix basis;
    for (int free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        QVector v(ncols, Rational(0));
        v[free_c] = 1;
        for (size_t row = 0; row < r.pivot_cols.size(); ++row) {
            int pc = r.pivot_cols[row];
            v[pc] = -r.mat[row][free_c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_span(const RrefResult& basis, QVector v) {
    for (size_t row = 0; row < basis.pivot_cols.size(); ++row) {
        int pc = basis.pivot_cols[row];
        if (v[pc] == 0) continue;
        Rational f = v[pc];
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * basis.mat[row][j];
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

} // namespace jetpva
