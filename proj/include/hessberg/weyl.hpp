#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hessberg/root_system.hpp"

namespace hessberg {

// One Weyl group element: its action on all root ids, the inversion set
// (positive roots sent to negatives by the inverse), the length, and the
// lexicographically smallest reduced word (0-based simple indices).
struct WeylElementData {
    RootPerm perm;
    RootSet inversions;
    int length = 0;
    std::vector<int> word;
};

// The full Weyl group, enumerated breadth-first and then sorted by
// (length, canonical word). Elements are dense ids; id 0 is the identity.
class WeylGroup {
public:
    static constexpr long long kDefaultCap = 60000;

    // Throws InputError when the group has more than cap elements.
    explicit WeylGroup(const RootSystem& rs, long long cap = kDefaultCap);

    const RootSystem& root_system() const { return *rs_; }
    int size() const { return static_cast<int>(elems_.size()); }
    int identity() const { return 0; }
    int simple(int i) const { return simple_elem_[i]; }

    int length(int w) const { return elems_[w].length; }
    const RootSet& inversions(int w) const { return elems_[w].inversions; }
    RootSet complement_inversions(int w) const;
    const std::vector<int>& word(int w) const { return elems_[w].word; }
    const RootPerm& perm(int w) const { return elems_[w].perm; }

    int apply(int w, int root_id) const { return elems_[w].perm[root_id]; }
    int compose(int a, int b) const;  // a then b applied inside-out: (a*b)(x) = a(b(x))
    int inverse(int w) const;

    // Element id of a permutation, or -1 if it is not in the group.
    int element_of_perm(const RootPerm& p) const;
    // Product of a (not necessarily reduced) word.
    int element_of_word(const std::vector<int>& letters) const;
    // The reflection through a positive root, as a group element.
    int reflection(int pos_id) const;

private:
    const RootSystem* rs_;
    std::vector<WeylElementData> elems_;
    std::unordered_map<std::uint64_t, std::vector<int>> index_;  // perm hash -> candidates
    std::vector<int> simple_elem_;

    static std::uint64_t perm_hash(const RootPerm& p);
    int lookup(const RootPerm& p) const;
};

// Maximal elements of the inversion set under coefficientwise dominance.
RootSet maximal_inversions(const WeylGroup& w_group, int w);

// A Levi datum: a subset of the simple roots, the roots supported on it,
// and the complementary positive roots (the nilradical directions).
struct LeviDatum {
    std::uint32_t mask = 0;   // bit i = alpha_{i+1} selected
    RootSet phi_m;            // all ids supported on the subset
    RootSet phi_m_pos;        // positive part of phi_m
    RootSet phi_uq;           // positive ids outside phi_m
};

LeviDatum make_levi(const RootSystem& rs, std::uint32_t mask);
bool levi_is_full(const RootSystem& rs, const LeviDatum& m);

// Membership in the Levi subgroup resp. the set of minimal-length coset
// representatives (characterized by the inversion set).
bool in_levi_subgroup(const WeylGroup& wg, int w, const LeviDatum& m);
bool is_minimal_coset_rep(const WeylGroup& wg, int v, const LeviDatum& m);

// Unique factorization w = y * v with y in the Levi subgroup, v a minimal
// coset representative, and lengths adding up. Returns (y, v).
std::pair<int, int> coset_decompose(const WeylGroup& wg, int w, const LeviDatum& m);

// Reconstructs the element whose inversion set is s. Requires s and its
// complement in the positive roots to be closed under addition; otherwise
// throws InputError naming an offending pair.
int weyl_from_inversions(const WeylGroup& wg, const RootSet& s);

}  // namespace hessberg
