#pragma once

#include <string>
#include <vector>

#include "hessberg/hessenberg.hpp"
#include "hessberg/weyl.hpp"

namespace hessberg {

// One affine cell of the variety attached to (Levi, space): the fixed point
// w, its factorization w = y * v over the Levi, and the cell dimension
//   dim = length(y) + |inversions(v) intersect v(negative part)|.
struct CellReport {
    int w = 0, y = 0, v = 0;
    int dim = 0;
    int ambient_length = 0;
};

// Betti numbers n_0..n_d (d = number of positive roots; trailing zeros are
// kept so the vector length is type-stable) plus the per-cell breakdown.
struct BettiTable {
    std::vector<long long> counts;
    std::vector<CellReport> cells;
};

int cell_dimension(const WeylGroup& wg, int w, const LeviDatum& levi, const HessenbergSpace& hess);

BettiTable betti_numbers(const WeylGroup& wg, const LeviDatum& levi, const HessenbergSpace& hess);

std::string poincare_polynomial(const std::vector<long long>& counts);

// Connectedness read off the Betti numbers: exactly one zero-dimensional cell.
bool connected_from_counts(const std::vector<long long>& counts);
bool is_connected_by_betti(const WeylGroup& wg, const LeviDatum& levi, const HessenbergSpace& hess);

// Connectedness read off the combinatorics: a full Levi always yields a
// connected variety; otherwise the space must contain every negative simple
// root.
bool is_connected_by_criterion(const RootSystem& rs, const LeviDatum& levi,
                               const HessenbergSpace& hess);

// For a disconnected variety (proper Levi, some negative simple missing),
// produces a nonidentity minimal coset representative spanning an extra
// zero-dimensional cell: alpha is the smallest-index simple root whose
// negative is missing; if alpha lies outside the Levi the witness is s_alpha,
// otherwise it is the coset part of the inverse of the element whose
// inversion set is the upper set of alpha.
struct DisconnectionWitness {
    int alpha_index = -1;  // 0-based simple index
    int v = -1;            // element id
};

DisconnectionWitness disconnection_witness(const WeylGroup& wg, const LeviDatum& levi,
                                           const HessenbergSpace& hess);

}  // namespace hessberg
