#pragma once

#include <vector>

#include "odkit/matrix.hpp"
#include "odkit/rings.hpp"

namespace odkit {

// Latin squares carry entries 0..n-1 in an IntMatrix.

bool is_latin(const IntMatrix& sq);

// Orthogonal: superimposing yields every ordered pair once.
bool are_orthogonal_latin(const IntMatrix& a, const IntMatrix& b);

// Suitable: every row of one superimposed on every row of the other
// matches in exactly one position.
bool are_suitable_latin(const IntMatrix& a, const IntMatrix& b);

// Field constructions over GF(q): q-1 squares indexed by the nonzero
// elements k, certified before returning.
// L_k(i,j) = k*i + j, pairwise orthogonal.
std::vector<IntMatrix> mols_field(const Ring& field);
// M_k(i,j) = k^{-1} (j - i), pairwise suitable.
std::vector<IntMatrix> msls_field(const Ring& field);

}  // namespace odkit
