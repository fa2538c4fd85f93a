#ifndef JETPVA_LINALG_HPP
#define JETPVA_LINALG_HPP

#include <vector>

#include "jetpva/rational.hpp"

namespace jetpva {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>; // row-major

// Rank over Q via fraction-free (Bareiss) elimination on the integer matrix
// obtained by clearing row denominators.
int rank_bareiss(QMatrix m);

struct RrefResult {
    QMatrix mat;
    std::vector<int> pivot_cols; // one per nonzero row
};

RrefResult rref(QMatrix m);

// Basis of the right kernel {x : m x = 0}; columns of m are the unknowns.
QMatrix kernel_basis(const QMatrix& m, int ncols);

// Row-space membership: is v in the span of the rows of basis?
// basis is expected in reduced row echelon form.
bool in_row_span(const RrefResult& basis, QVector v);

} // namespace jetpva

#endif
