#include "hessberg/nilpotent.hpp"

#include "hessberg/errors.hpp"

namespace hessberg {

bool is_fixed_point(const WeylGroup& wg, int w, const NilpotentSupport& nilp,
                    const HessenbergSpace& hess) {
    const RootSystem& rs = wg.root_system();
    int winv = wg.inverse(w);
    for (int g = nilp.phi_n.next(0); g != -1; g = nilp.phi_n.next(g + 1))
        if (!in_space(rs, hess, wg.apply(winv, g))) return false;
    return true;
}

std::vector<int> fixed_points(const WeylGroup& wg, const NilpotentSupport& nilp,
                              const HessenbergSpace& hess) {
    std::vector<int> out;
    for (int w = 0; w < wg.size(); ++w)
        if (is_fixed_point(wg, w, nilp, hess)) out.push_back(w);
    return out;
}

RootSet phi_gamma_n(const RootSystem& rs, int gamma_pos_id, const NilpotentSupport& nilp) {
    if (gamma_pos_id < 0 || gamma_pos_id >= rs.num_positive())
        throw InputError("phi_gamma_n requires a positive root id");
    const Root& gamma = rs.positive_root(gamma_pos_id);
    RootSet out;
    for (int a = nilp.phi_n.next(0); a != -1; a = nilp.phi_n.next(a + 1)) {
        const Root& alpha = rs.positive_root(a);
        for (int c = 1; c <= 3; ++c) {
            Root cand{std::vector<int>(rs.rank(), 0)};
            for (int i = 0; i < rs.rank(); ++i)
                cand.coeffs[i] = c * gamma.coeffs[i] + alpha.coeffs[i];
            if (auto id = rs.positive_id_of(cand)) out.set(*id);
        }
    }
    return out;
}

bool curve_admissible(const WeylGroup& wg, int w, int gamma_pos_id, const NilpotentSupport& nilp,
                      const HessenbergSpace& hess) {
    if (!is_fixed_point(wg, w, nilp, hess))
        throw InputError("curve step rejected: w is not a fixed point of the variety");
    if (!maximal_inversions(wg, w).test(gamma_pos_id))
        throw InputError("curve step rejected: gamma is not a maximal inversion of w");

    const RootSystem& rs = wg.root_system();
    if (phi_gamma_n(rs, gamma_pos_id, nilp).intersects(wg.inversions(w))) return false;
    int after = wg.compose(wg.reflection(gamma_pos_id), w);
    return is_fixed_point(wg, after, nilp, hess);
}

ChainStep descend(const WeylGroup& wg, int w, const NilpotentSupport& nilp,
                  const HessenbergSpace& hess) {
    const RootSystem& rs = wg.root_system();
    if (w == wg.identity()) throw InputError("the identity fixed point has no descent step");
    if (!is_fixed_point(wg, w, nilp, hess))
        throw InputError("descent requires a fixed point of the variety");

    RootSet mx = maximal_inversions(wg, w);
    int gamma = -1;
    for (int g = mx.next(0); g != -1; g = mx.next(g + 1))
        if (gamma < 0 || lex_less(rs.positive_root(g), rs.positive_root(gamma))) gamma = g;
    if (gamma < 0)
        throw PropertyViolation("nonidentity element with empty maximal inversion set");

    if (!curve_admissible(wg, w, gamma, nilp, hess))
        throw PropertyViolation("descent step not admissible at the chosen maximal inversion");
    int after = wg.compose(wg.reflection(gamma), w);
    if (wg.length(after) >= wg.length(w))
        throw PropertyViolation("descent step did not decrease length");
    return ChainStep{w, gamma, after};
}

Chain connect_chain(const WeylGroup& wg, int w, const NilpotentSupport& nilp,
                    const HessenbergSpace& hess) {
    if (!is_fixed_point(wg, w, nilp, hess))
        throw InputError("chain start is not a fixed point of the variety");
    Chain chain;
    chain.start = w;
    int budget = wg.length(w);
    int cur = w;
    while (cur != wg.identity()) {
        if (static_cast<int>(chain.steps.size()) >= budget)
            throw PropertyViolation("descent chain exceeded the length of its start");
        chain.steps.push_back(descend(wg, cur, nilp, hess));
        cur = chain.steps.back().w_after;
    }
    return chain;
}

}  // namespace hessberg
