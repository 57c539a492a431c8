#include "hessberg/hessenberg.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "hessberg/errors.hpp"

namespace hessberg {

std::optional<HessClosureWitness> hessenberg_violation(const RootSystem& rs, const RootSet& neg) {
    const int m = rs.num_positive();
    // Sums of positive roots that are roots stay positive, so only the
    // negative members can witness a closure failure.
    for (int b = neg.next(0); b != -1; b = neg.next(b + 1)) {
        Root beta = rs.positive_root(b).negated();
        for (int a = 0; a < m; ++a) {
            const Root& alpha = rs.positive_root(a);
            Root sum = beta;
            for (int i = 0; i < rs.rank(); ++i) sum.coeffs[i] += alpha.coeffs[i];
            auto id = rs.id_of(sum);
            if (!id) continue;
            if (*id >= m && !neg.test(*id - m)) return HessClosureWitness{beta, alpha, sum};
        }
    }
    return std::nullopt;
}

static std::string root_coeffs(const Root& r) {
    std::string t = "(";
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        t += (i ? "," : "") + std::to_string(r.coeffs[i]);
    return t + ")";
}

HessenbergSpace validate_hessenberg(const RootSystem& rs, const RootSet& neg) {
    if (!neg.is_subset_of(rs.positive_universe()))
        throw InputError("negative part indexes a root outside the positive range");
    if (auto w = hessenberg_violation(rs, neg))
        throw InputError("not a Hessenberg space: " + root_coeffs(w->beta) + " + " +
                         root_coeffs(w->alpha) + " = " + root_coeffs(w->sum) +
                         " escapes the space");
    return HessenbergSpace{neg};
}

HessenbergSpace hessenberg_from_negative_roots(const RootSystem& rs,
                                               const std::vector<Root>& roots) {
    RootSet neg;
    for (const Root& r : roots) {
        auto id = rs.id_of(r);
        if (!id || *id < rs.num_positive())
            throw InputError("expected a negative root, got " + root_coeffs(r));
        neg.set(*id - rs.num_positive());
    }
    return validate_hessenberg(rs, neg);
}

HessenbergSpace hessenberg_minimal() { return HessenbergSpace{}; }

HessenbergSpace hessenberg_full(const RootSystem& rs) {
    return HessenbergSpace{rs.positive_universe()};
}

std::vector<HessenbergSpace> enumerate_hessenberg(const RootSystem& rs) {
    if (rs.rank() > 4)
        throw InputError("Hessenberg space enumeration is guarded at rank 4 (got " +
                         rs.name() + ")");
    const int m = rs.num_positive();

    // strictly_below[g]: positive roots strictly dominated by g. An ideal
    // can absorb g once all of them are present.
    std::vector<RootSet> strictly_below(m);
    for (int g = 0; g < m; ++g)
        for (int d = 0; d < m; ++d)
            if (d != g && leq(rs.positive_root(d), rs.positive_root(g)))
                strictly_below[g].set(d);

    std::unordered_set<RootSet, RootSetHash> seen;
    std::deque<RootSet> queue;
    seen.insert(RootSet{});
    queue.push_back(RootSet{});
    std::vector<RootSet> ideals;
    while (!queue.empty()) {
        RootSet cur = queue.front();
        queue.pop_front();
        ideals.push_back(cur);
        for (int g = 0; g < m; ++g) {
            if (cur.test(g) || !strictly_below[g].is_subset_of(cur)) continue;
            RootSet nxt = cur;
            nxt.set(g);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }

    std::sort(ideals.begin(), ideals.end(), [](const RootSet& a, const RootSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return RootSet::compare_value(a, b) < 0;
    });

    std::vector<HessenbergSpace> out;
    out.reserve(ideals.size());
    for (const RootSet& s : ideals) out.push_back(validate_hessenberg(rs, s));
    return out;
}

HessenbergSpace hessenberg_from_function(const RootSystem& rs, const std::vector<int>& h) {
    if (rs.cartan().family != 'A')
        throw InputError("Hessenberg functions only describe type A spaces");
    const int n = rs.rank() + 1;
    if (static_cast<int>(h.size()) != n)
        throw InputError("Hessenberg function needs exactly " + std::to_string(n) + " values");
    for (int i = 1; i <= n; ++i) {
        if (h[i - 1] < i)
            throw InputError("Hessenberg function must satisfy h(i) >= i (fails at i=" +
                             std::to_string(i) + ")");
        if (h[i - 1] > n)
            throw InputError("Hessenberg function value exceeds n at i=" + std::to_string(i));
        if (i > 1 && h[i - 1] < h[i - 2])
            throw InputError("Hessenberg function must be nondecreasing (fails at i=" +
                             std::to_string(i) + ")");
    }

    // e_i - e_j (i > j) is minus the sum of the simple roots j..i-1.
    RootSet neg;
    for (int j = 1; j <= n; ++j) {
        for (int i = j + 1; i <= h[j - 1]; ++i) {
            Root r{std::vector<int>(rs.rank(), 0)};
            for (int k = j; k <= i - 1; ++k) r.coeffs[k - 1] = 1;
            auto id = rs.positive_id_of(r);
            if (!id) throw PropertyViolation("interval sum is not a positive root");
            neg.set(*id);
        }
    }
    return validate_hessenberg(rs, neg);
}

bool contains_negative_simples(const RootSystem& rs, const HessenbergSpace& hess) {
    for (int i = 0; i < rs.rank(); ++i)
        if (!hess.neg.test(rs.simple_pos_id(i))) return false;
    return true;
}

bool in_space(const RootSystem& rs, const HessenbergSpace& hess, int root_id) {
    if (root_id < rs.num_positive()) return true;
    return hess.neg.test(root_id - rs.num_positive());
}

}  // namespace hessberg
