#pragma once

#include <vector>

#include "hessberg/hessenberg.hpp"
#include "hessberg/weyl.hpp"

namespace hessberg {

// Support of a nilpotent element: the positive roots whose root vectors
// appear with nonzero coefficient. May be empty.
struct NilpotentSupport {
    RootSet phi_n;
};

// w is a fixed point of the nilpotent Hessenberg variety iff the inverse of
// w carries the whole support into the space.
bool is_fixed_point(const WeylGroup& wg, int w, const NilpotentSupport& nilp,
                    const HessenbergSpace& hess);
std::vector<int> fixed_points(const WeylGroup& wg, const NilpotentSupport& nilp,
                              const HessenbergSpace& hess);

// Positive roots of the form c*gamma + alpha with c in {1,2,3} and alpha in
// the support. Every member strictly dominates gamma.
RootSet phi_gamma_n(const RootSystem& rs, int gamma_pos_id, const NilpotentSupport& nilp);

// The two support-level conditions that let the rational curve through the
// cell of w in the gamma direction degenerate inside the variety:
//   (a) phi_gamma_n avoids the inversion set of w, and
//   (b) the reflected fixed point s_gamma * w is again a fixed point.
// Preconditions (w fixed, gamma a maximal inversion) are reported as
// distinct input errors.
bool curve_admissible(const WeylGroup& wg, int w, int gamma_pos_id, const NilpotentSupport& nilp,
                      const HessenbergSpace& hess);

struct ChainStep {
    int w_before = -1;
    int gamma = -1;  // positive root id
    int w_after = -1;
};

// One descent step from a nonidentity fixed point: gamma is the maximal
// inversion with lexicographically smallest coefficient vector, and the step
// moves to s_gamma * w, strictly shorter. Admissibility failures are
// property violations, not input errors.
ChainStep descend(const WeylGroup& wg, int w, const NilpotentSupport& nilp,
                  const HessenbergSpace& hess);

struct Chain {
    int start = 0;
    std::vector<ChainStep> steps;
};

// Iterated descent from a fixed point down to the identity.
Chain connect_chain(const WeylGroup& wg, int w, const NilpotentSupport& nilp,
                    const HessenbergSpace& hess);

}  // namespace hessberg
