#include "hessberg/semisimple.hpp"

#include "hessberg/errors.hpp"

namespace hessberg {

int cell_dimension(const WeylGroup& wg, int w, const LeviDatum& levi,
                   const HessenbergSpace& hess) {
    const RootSystem& rs = wg.root_system();
    auto [y, v] = coset_decompose(wg, w, levi);
    int dim = wg.length(y);
    const RootSet& inv_v = wg.inversions(v);
    for (int b = hess.neg.next(0); b != -1; b = hess.neg.next(b + 1)) {
        int img = wg.apply(v, rs.negate_id(b));
        if (img < rs.num_positive() && inv_v.test(img)) ++dim;
    }
    return dim;
}

BettiTable betti_numbers(const WeylGroup& wg, const LeviDatum& levi, const HessenbergSpace& hess) {
    const RootSystem& rs = wg.root_system();
    BettiTable t;
    t.counts.assign(rs.num_positive() + 1, 0);
    t.cells.reserve(wg.size());
    for (int w = 0; w < wg.size(); ++w) {
        auto [y, v] = coset_decompose(wg, w, levi);
        CellReport c;
        c.w = w;
        c.y = y;
        c.v = v;
        c.ambient_length = wg.length(w);
        c.dim = wg.length(y);
        const RootSet& inv_v = wg.inversions(v);
        for (int b = hess.neg.next(0); b != -1; b = hess.neg.next(b + 1)) {
            int img = wg.apply(v, rs.negate_id(b));
            if (img < rs.num_positive() && inv_v.test(img)) ++c.dim;
        }
        if (c.dim > c.ambient_length)
            throw PropertyViolation("cell dimension exceeds the length of its fixed point");
        ++t.counts[c.dim];
        t.cells.push_back(c);
    }
    return t;
}

std::string poincare_polynomial(const std::vector<long long>& counts) {
    std::string out;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += std::to_string(counts[k]);
        } else {
            if (counts[k] != 1) out += std::to_string(counts[k]);
            out += "q";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

bool connected_from_counts(const std::vector<long long>& counts) { return counts[0] == 1; }

bool is_connected_by_betti(const WeylGroup& wg, const LeviDatum& levi,
                           const HessenbergSpace& hess) {
    return connected_from_counts(betti_numbers(wg, levi, hess).counts);
}

bool is_connected_by_criterion(const RootSystem& rs, const LeviDatum& levi,
                               const HessenbergSpace& hess) {
    if (levi_is_full(rs, levi)) return true;
    return contains_negative_simples(rs, hess);
}

DisconnectionWitness disconnection_witness(const WeylGroup& wg, const LeviDatum& levi,
                                           const HessenbergSpace& hess) {
    const RootSystem& rs = wg.root_system();
    if (levi_is_full(rs, levi))
        throw InputError("full Levi subset: the variety is connected, no witness exists");

    int alpha = -1;
    for (int i = 0; i < rs.rank(); ++i) {
        if (!hess.neg.test(rs.simple_pos_id(i))) {
            alpha = i;
            break;
        }
    }
    if (alpha < 0)
        throw InputError("every negative simple root is present: connected, no witness exists");

    DisconnectionWitness out;
    out.alpha_index = alpha;
    if (!((levi.mask >> alpha) & 1)) {
        // alpha lies in the nilradical directions: its reflection is already
        // a minimal coset representative with a zero-dimensional cell.
        out.v = wg.simple(alpha);
        return out;
    }
    // alpha lies in the Levi: take w with inversion set the upper set of
    // alpha, and split off the coset part of its inverse.
    int w = weyl_from_inversions(wg, upper_set(rs, alpha));
    auto [y, v] = coset_decompose(wg, wg.inverse(w), levi);
    (void)y;
    if (v == wg.identity())
        throw PropertyViolation("witness construction produced the identity representative");
    out.v = v;
    return out;
}

}  // namespace hessberg
