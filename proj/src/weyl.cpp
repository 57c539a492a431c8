#include "hessberg/weyl.hpp"

#include <algorithm>
#include <deque>

#include "hessberg/errors.hpp"

namespace hessberg {

std::uint64_t WeylGroup::perm_hash(const RootPerm& p) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint16_t v : p) {
        h ^= v;
        h *= 0x100000001b3ull;
    }
    return h;
}

static RootPerm invert_perm(const RootPerm& p) {
    RootPerm inv(p.size());
    for (std::size_t r = 0; r < p.size(); ++r) inv[p[r]] = static_cast<std::uint16_t>(r);
    return inv;
}

WeylGroup::WeylGroup(const RootSystem& rs, long long cap) : rs_(&rs) {
    const int n = rs.rank();
    const int m = rs.num_positive();
    const int nr = rs.num_roots();

    // Breadth-first closure under right multiplication by the generators.
    std::vector<RootPerm> perms;
    std::unordered_map<std::uint64_t, std::vector<int>> seen;
    auto try_insert = [&](RootPerm p) -> bool {
        std::uint64_t h = perm_hash(p);
        auto& bucket = seen[h];
        for (int idx : bucket)
            if (perms[idx] == p) return false;
        bucket.push_back(static_cast<int>(perms.size()));
        perms.push_back(std::move(p));
        return true;
    };

    RootPerm id(nr);
    for (int r = 0; r < nr; ++r) id[r] = static_cast<std::uint16_t>(r);
    try_insert(id);

    std::deque<int> queue{0};
    while (!queue.empty()) {
        RootPerm p = perms[queue.front()];  // copy: perms may reallocate
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            const RootPerm& si = rs.simple_reflection_perm(i);
            RootPerm q(nr);
            for (int r = 0; r < nr; ++r) q[r] = p[si[r]];
            if (try_insert(std::move(q))) {
                if (static_cast<long long>(perms.size()) > cap)
                    throw InputError("Weyl group of " + rs.name() + " exceeds the element cap of " +
                                     std::to_string(cap) + " (pass --force to override)");
                queue.push_back(static_cast<int>(perms.size()) - 1);
            }
        }
    }

    // Inversion sets, lengths and canonical words. The canonical word is
    // built greedily: the smallest left descent is the first letter.
    elems_.resize(perms.size());
    for (std::size_t k = 0; k < perms.size(); ++k) {
        WeylElementData e;
        e.perm = perms[k];
        RootPerm inv = invert_perm(e.perm);
        for (int g = 0; g < m; ++g)
            if (inv[g] >= m) e.inversions.set(g);
        e.length = e.inversions.count();

        RootPerm curinv = inv;
        for (;;) {
            int letter = -1;
            for (int i = 0; i < n; ++i) {
                if (curinv[rs.simple_pos_id(i)] >= static_cast<std::uint16_t>(m)) {
                    letter = i;
                    break;
                }
            }
            if (letter < 0) break;
            e.word.push_back(letter);
            const RootPerm& si = rs.simple_reflection_perm(letter);
            RootPerm nxt(nr);
            for (int r = 0; r < nr; ++r) nxt[r] = curinv[si[r]];
            curinv = std::move(nxt);
        }
        if (static_cast<int>(e.word.size()) != e.length)
            throw PropertyViolation("canonical word length does not match inversion count");
        elems_[k] = std::move(e);
    }

    std::sort(elems_.begin(), elems_.end(), [](const WeylElementData& a, const WeylElementData& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });

    index_.clear();
    for (int k = 0; k < static_cast<int>(elems_.size()); ++k)
        index_[perm_hash(elems_[k].perm)].push_back(k);

    simple_elem_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        simple_elem_[i] = lookup(rs.simple_reflection_perm(i));
        if (simple_elem_[i] < 0) throw PropertyViolation("generator missing after enumeration");
    }
    if (elems_.empty() || elems_[0].length != 0)
        throw PropertyViolation("identity not first after sorting");
}

int WeylGroup::lookup(const RootPerm& p) const {
    auto it = index_.find(perm_hash(p));
    if (it == index_.end()) return -1;
    for (int idx : it->second)
        if (elems_[idx].perm == p) return idx;
    return -1;
}

int WeylGroup::element_of_perm(const RootPerm& p) const { return lookup(p); }

RootSet WeylGroup::complement_inversions(int w) const {
    return rs_->positive_universe().minus(elems_[w].inversions);
}

int WeylGroup::compose(int a, int b) const {
    const RootPerm& pa = elems_[a].perm;
    const RootPerm& pb = elems_[b].perm;
    RootPerm q(pa.size());
    for (std::size_t r = 0; r < pa.size(); ++r) q[r] = pa[pb[r]];
    int idx = lookup(q);
    if (idx < 0) throw PropertyViolation("product fell outside the enumerated group");
    return idx;
}

int WeylGroup::inverse(int w) const {
    int idx = lookup(invert_perm(elems_[w].perm));
    if (idx < 0) throw PropertyViolation("inverse fell outside the enumerated group");
    return idx;
}

int WeylGroup::element_of_word(const std::vector<int>& letters) const {
    int w = identity();
    for (int i : letters) {
        if (i < 0 || i >= rs_->rank()) throw InputError("word letter out of range");
        w = compose(w, simple(i));
    }
    return w;
}

int WeylGroup::reflection(int pos_id) const {
    int idx = lookup(rs_->reflection_perm(pos_id));
    if (idx < 0) throw PropertyViolation("reflection missing from the enumerated group");
    return idx;
}

RootSet maximal_inversions(const WeylGroup& wg, int w) {
    const RootSystem& rs = wg.root_system();
    const RootSet& inv = wg.inversions(w);
    RootSet out;
    for (int g = inv.next(0); g != -1; g = inv.next(g + 1)) {
        bool maximal = true;
        for (int d = inv.next(0); d != -1 && maximal; d = inv.next(d + 1))
            if (d != g && leq(rs.positive_root(g), rs.positive_root(d))) maximal = false;
        if (maximal) out.set(g);
    }
    return out;
}

LeviDatum make_levi(const RootSystem& rs, std::uint32_t mask) {
    if (rs.rank() < 32 && (mask >> rs.rank()) != 0)
        throw InputError("Levi subset mentions a simple root beyond the rank");
    LeviDatum m;
    m.mask = mask;
    for (int id = 0; id < rs.num_roots(); ++id) {
        Root r = rs.root(id);
        bool supported = true;
        for (int i = 0; i < rs.rank() && supported; ++i)
            if (r.coeffs[i] != 0 && !((mask >> i) & 1)) supported = false;
        if (supported) m.phi_m.set(id);
    }
    m.phi_m_pos = m.phi_m & rs.positive_universe();
    m.phi_uq = rs.positive_universe().minus(m.phi_m_pos);
    return m;
}

bool levi_is_full(const RootSystem& rs, const LeviDatum& m) {
    for (int i = 0; i < rs.rank(); ++i)
        if (!((m.mask >> i) & 1)) return false;
    return true;
}

bool in_levi_subgroup(const WeylGroup& wg, int w, const LeviDatum& m) {
    return wg.inversions(w).is_subset_of(m.phi_m_pos);
}

bool is_minimal_coset_rep(const WeylGroup& wg, int v, const LeviDatum& m) {
    return wg.inversions(v).is_subset_of(m.phi_uq);
}

std::pair<int, int> coset_decompose(const WeylGroup& wg, int w, const LeviDatum& m) {
    const RootSystem& rs = wg.root_system();
    int y = wg.identity();
    int cur = w;
    // Strip simple roots of the Levi subset off the left while they are
    // left descents; the factorization is unique, the strip order is not.
    for (;;) {
        int letter = -1;
        for (int i = 0; i < rs.rank(); ++i) {
            if (((m.mask >> i) & 1) && wg.inversions(cur).test(rs.simple_pos_id(i))) {
                letter = i;
                break;
            }
        }
        if (letter < 0) break;
        y = wg.compose(y, wg.simple(letter));
        cur = wg.compose(wg.simple(letter), cur);
    }
    return {y, cur};
}

int weyl_from_inversions(const WeylGroup& wg, const RootSet& s) {
    const RootSystem& rs = wg.root_system();
    auto describe = [&](const ClosureViolation& v) {
        auto txt = [&](int id) {
            std::string t = "(";
            const Root r = rs.root(id);
            for (std::size_t i = 0; i < r.coeffs.size(); ++i)
                t += (i ? "," : "") + std::to_string(r.coeffs[i]);
            return t + ")";
        };
        return txt(v.a) + " + " + txt(v.b) + " = " + txt(v.sum);
    };
    if (!s.is_subset_of(rs.positive_universe()))
        throw InputError("inversion set contains a non-positive id");
    if (auto v = closure_violation(rs, s))
        throw InputError("inversion set is not closed under addition: " + describe(*v));
    RootSet comp = rs.positive_universe().minus(s);
    if (auto v = closure_violation(rs, comp))
        throw InputError("complement of the inversion set is not closed: " + describe(*v));

    // Peel simple roots: if alpha in S then S' = s_alpha(S \ {alpha}) is the
    // inversion set of s_alpha * w, and the element reassembles on the left.
    int w = wg.identity();
    RootSet cur = s;
    while (cur.any()) {
        int alpha = -1;
        for (int i = 0; i < rs.rank(); ++i) {
            if (cur.test(rs.simple_pos_id(i))) {
                alpha = i;
                break;
            }
        }
        if (alpha < 0)
            throw PropertyViolation("nonempty closed and co-closed set without a simple root");
        w = wg.compose(w, wg.simple(alpha));
        RootSet next;
        int aid = rs.simple_pos_id(alpha);
        for (int g = cur.next(0); g != -1; g = cur.next(g + 1)) {
            if (g == aid) continue;
            int img = rs.simple_reflect(alpha, g);
            if (img >= rs.num_positive())
                throw PropertyViolation("simple reflection left the positive roots during peel");
            next.set(img);
        }
        cur = next;
    }
    if (wg.inversions(w) != s)
        throw PropertyViolation("reconstructed element has the wrong inversion set");
    return w;
}

}  // namespace hessberg
