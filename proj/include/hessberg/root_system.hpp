#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hessberg/bitset.hpp"
#include "hessberg/cartan.hpp"

namespace hessberg {

// A root in simple-root coordinates.
struct Root {
    std::vector<int> coeffs;

    int height() const;
    bool is_zero() const;
    bool is_positive() const;  // nonzero, no negative coefficient
    bool is_negative() const;
    Root negated() const;
    bool operator==(const Root&) const = default;
};

// Lexicographic order on coefficient vectors; the tie-break used everywhere.
bool lex_less(const Root& a, const Root& b);

// Coefficientwise dominance: gamma <= delta iff delta - gamma has no
// negative coefficient. This is the partial order on roots throughout.
bool leq(const Root& gamma, const Root& delta);

// A permutation of root ids, indexed by id.
using RootPerm = std::vector<std::uint16_t>;

// The full root set of an irreducible Cartan matrix, generated by saturating
// the simple roots under simple reflections.
//
// Dense ids: positive roots get ids 0..m-1 sorted by (height, lex); id m+i
// is the negative of id i. A RootSet over positive ids is therefore also a
// valid set over all ids.
class RootSystem {
public:
    explicit RootSystem(CartanDatum cartan);

    const CartanDatum& cartan() const { return cartan_; }
    std::string name() const { return cartan_.name(); }
    int rank() const { return cartan_.rank; }
    int num_positive() const { return m_; }
    int num_roots() const { return 2 * m_; }

    const Root& positive_root(int pos_id) const { return positive_[pos_id]; }
    Root root(int id) const;
    bool is_positive_id(int id) const { return id < m_; }
    int negate_id(int id) const { return id < m_ ? id + m_ : id - m_; }
    int pos_index(int id) const { return id < m_ ? id : id - m_; }

    std::optional<int> id_of(const Root& r) const;
    std::optional<int> positive_id_of(const Root& r) const;

    // Positive id of alpha_{i+1} (0-based simple index).
    int simple_pos_id(int i) const { return simple_pos_id_[i]; }
    // Simple index of a positive id, if it is a simple root.
    std::optional<int> simple_index_of(int pos_id) const;

    int theta_id() const { return theta_id_; }  // highest root

    // <r, alpha_i^vee>, the Cartan pairing with a simple coroot.
    int pairing(const Root& r, int i) const;

    int simple_reflect(int i, int id) const { return simple_refl_[i][id]; }
    const RootPerm& simple_reflection_perm(int i) const { return simple_refl_[i]; }

    // The reflection through any positive root, as a permutation of all ids.
    const RootPerm& reflection_perm(int pos_id) const { return refl_[pos_id]; }

    RootSet positive_universe() const { return RootSet::first_n(m_); }

private:
    CartanDatum cartan_;
    int m_ = 0;
    std::vector<Root> positive_;
    std::map<std::vector<int>, int> index_;  // coefficient vector -> all-root id
    std::vector<int> simple_pos_id_;
    int theta_id_ = -1;
    std::vector<RootPerm> simple_refl_;
    std::vector<RootPerm> refl_;

    friend RootSystem build_root_system(const CartanDatum&);
};

RootSystem build_root_system(const CartanDatum& cartan);

// s_alpha(gamma) for a simple root alpha. Throws InputError if alpha is not
// simple or gamma is not a root.
Root reflect(const RootSystem& rs, const Root& gamma, const Root& alpha);

// All positive roots >= alpha for a simple root alpha; equivalently those
// whose alpha-coefficient is at least 1.
RootSet upper_set(const RootSystem& rs, const Root& alpha);
RootSet upper_set(const RootSystem& rs, int simple_index);

// Closure under addition inside the root set: for gamma, delta in S with
// gamma + delta a root, gamma + delta must lie in S. The witness carries the
// offending triple as all-root ids.
struct ClosureViolation {
    int a, b, sum;
};
std::optional<ClosureViolation> closure_violation(const RootSystem& rs, const RootSet& s);
bool is_closed(const RootSystem& rs, const RootSet& s);
bool is_closed(const RootSystem& rs, const std::vector<Root>& roots);

// Decomposes a positive root as an ordered sum of simple roots in which
// every prefix sum is again a positive root. Deterministic: scanning from
// the full root downward, each step removes the lex-smallest simple root
// that keeps the remainder a positive root.
std::vector<Root> partial_sum_chain(const RootSystem& rs, const Root& gamma);

}  // namespace hessberg
