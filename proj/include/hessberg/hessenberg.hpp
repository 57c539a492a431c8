#pragma once

#include <optional>
#include <vector>

#include "hessberg/root_system.hpp"

namespace hessberg {

// A Hessenberg space, stored by its negative part: bit i means the negative
// of positive root i belongs to the space. The positive roots are always
// included implicitly. Valid spaces are closed under adding positive roots,
// equivalently the set of underlying positive roots is a lower order ideal
// of the root poset.
struct HessenbergSpace {
    RootSet neg;

    bool operator==(const HessenbergSpace&) const = default;
};

// Offending triple when closure fails: beta in the space, alpha positive,
// beta + alpha a root outside the space.
struct HessClosureWitness {
    Root beta, alpha, sum;
};

std::optional<HessClosureWitness> hessenberg_violation(const RootSystem& rs, const RootSet& neg);

// Validates and wraps a candidate negative part; throws InputError with the
// witness triple on failure.
HessenbergSpace validate_hessenberg(const RootSystem& rs, const RootSet& neg);

// Builds a space from explicit negative roots (each must be a negative root).
HessenbergSpace hessenberg_from_negative_roots(const RootSystem& rs, const std::vector<Root>& roots);

// The two standard extremes: minimal (no negative roots) and maximal (all).
HessenbergSpace hessenberg_minimal();
HessenbergSpace hessenberg_full(const RootSystem& rs);

// All valid spaces, ordered by (size of negative part, bitset value).
// Guarded at rank <= 4.
std::vector<HessenbergSpace> enumerate_hessenberg(const RootSystem& rs);

// Type A ingestion: a nondecreasing function h with i <= h(i) <= n yields
// the space containing e_i - e_j (i > j) exactly when i <= h(j).
HessenbergSpace hessenberg_from_function(const RootSystem& rs, const std::vector<int>& h);

bool contains_negative_simples(const RootSystem& rs, const HessenbergSpace& hess);

// Membership of an arbitrary root id in the space.
bool in_space(const RootSystem& rs, const HessenbergSpace& hess, int root_id);

}  // namespace hessberg
