#include "hessberg/root_system.hpp"

#include <algorithm>
#include <set>

#include "hessberg/errors.hpp"

namespace hessberg {

int Root::height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
}

bool Root::is_zero() const {
    for (int c : coeffs)
        if (c) return false;
    return true;
}

bool Root::is_positive() const {
    if (is_zero()) return false;
    for (int c : coeffs)
        if (c < 0) return false;
    return true;
}

bool Root::is_negative() const {
    if (is_zero()) return false;
    for (int c : coeffs)
        if (c > 0) return false;
    return true;
}

Root Root::negated() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
}

bool lex_less(const Root& a, const Root& b) { return a.coeffs < b.coeffs; }

bool leq(const Root& gamma, const Root& delta) {
    for (std::size_t i = 0; i < gamma.coeffs.size(); ++i)
        if (delta.coeffs[i] - gamma.coeffs[i] < 0) return false;
    return true;
}

static std::vector<int> reflect_vec(const CartanDatum& c, const std::vector<int>& r, int i) {
    int k = 0;
    for (int j = 0; j < c.rank; ++j) k += r[j] * c.matrix[j][i];
    std::vector<int> out = r;
    out[i] -= k;
    return out;
}

RootSystem::RootSystem(CartanDatum cartan) : cartan_(std::move(cartan)) {
    cartan_.check();
    const int n = cartan_.rank;

    // Saturate the simple roots under simple reflections.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> work;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        work.push_back(e);
    }
    while (!work.empty()) {
        std::vector<int> r = work.back();
        work.pop_back();
        for (int i = 0; i < n; ++i) {
            std::vector<int> s = reflect_vec(cartan_, r, i);
            if (seen.insert(s).second) work.push_back(s);
        }
    }

    for (const auto& v : seen) {
        Root r{v};
        if (r.is_positive())
            positive_.push_back(r);
        else if (!r.is_negative())
            throw PropertyViolation("root with mixed coefficient signs generated");
    }
    m_ = static_cast<int>(positive_.size());
    if (static_cast<std::size_t>(2 * m_) != seen.size())
        throw PropertyViolation("root set is not symmetric under negation");
    if (2 * m_ > RootSet::kBits)
        throw InputError("root system too large for " + cartan_.name() +
                         " (more than " + std::to_string(RootSet::kBits / 2) +
                         " positive roots)");

    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
        int ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a.coeffs < b.coeffs;
    });

    for (int i = 0; i < m_; ++i) {
        index_[positive_[i].coeffs] = i;
        index_[positive_[i].negated().coeffs] = m_ + i;
        if (!seen.count(positive_[i].negated().coeffs))
            throw PropertyViolation("negative of a positive root missing");
    }

    simple_pos_id_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        auto it = index_.find(e);
        if (it == index_.end()) throw PropertyViolation("simple root missing from root set");
        simple_pos_id_[i] = it->second;
    }

    // Highest root: the unique coefficientwise-maximal positive root.
    int best = -1;
    for (int g = 0; g < m_; ++g) {
        bool maximal = true;
        for (int d = 0; d < m_ && maximal; ++d)
            if (d != g && leq(positive_[g], positive_[d])) maximal = false;
        if (maximal) {
            if (best != -1)
                throw PropertyViolation("highest root is not unique (matrix not irreducible?)");
            best = g;
        }
    }
    if (best == -1) throw PropertyViolation("no maximal positive root");
    for (int c : positive_[best].coeffs)
        if (c < 1) throw PropertyViolation("highest root does not have full support");
    theta_id_ = best;

    // Permutations induced by the simple reflections on all root ids.
    simple_refl_.assign(n, RootPerm(2 * m_));
    for (int i = 0; i < n; ++i) {
        for (int id = 0; id < 2 * m_; ++id) {
            Root img{reflect_vec(cartan_, root(id).coeffs, i)};
            auto it = index_.find(img.coeffs);
            if (it == index_.end())
                throw PropertyViolation("root set not stable under simple reflection");
            simple_refl_[i][id] = static_cast<std::uint16_t>(it->second);
        }
    }

    // Reflections through arbitrary positive roots, built by height:
    // gamma = s_j(gamma') with gamma' lower, so s_gamma = s_j s_gamma' s_j.
    refl_.assign(m_, RootPerm());
    for (int g = 0; g < m_; ++g) {
        const Root& gamma = positive_[g];
        if (auto si = simple_index_of(g)) {
            refl_[g] = simple_refl_[*si];
        } else {
            int j = -1;
            for (int i = 0; i < n; ++i) {
                if (pairing(gamma, i) > 0) {
                    j = i;
                    break;
                }
            }
            if (j < 0) throw PropertyViolation("positive root with no descent direction");
            int gprime = pos_index(simple_refl_[j][g]);
            const RootPerm& pj = simple_refl_[j];
            const RootPerm& pg = refl_[gprime];
            RootPerm p(2 * m_);
            for (int id = 0; id < 2 * m_; ++id) p[id] = pj[pg[pj[id]]];
            refl_[g] = std::move(p);
        }
        if (refl_[g][g] != static_cast<std::uint16_t>(negate_id(g)))
            throw PropertyViolation("reflection does not negate its own root");
    }
}

Root RootSystem::root(int id) const {
    if (id < m_) return positive_[id];
    return positive_[id - m_].negated();
}

std::optional<int> RootSystem::id_of(const Root& r) const {
    auto it = index_.find(r.coeffs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> RootSystem::positive_id_of(const Root& r) const {
    auto id = id_of(r);
    if (!id || *id >= m_) return std::nullopt;
    return id;
}

std::optional<int> RootSystem::simple_index_of(int pos_id) const {
    const Root& r = positive_[pos_id];
    if (r.height() != 1) return std::nullopt;
    for (int i = 0; i < rank(); ++i)
        if (r.coeffs[i] == 1) return i;
    return std::nullopt;
}

int RootSystem::pairing(const Root& r, int i) const {
    int k = 0;
    for (int j = 0; j < rank(); ++j) k += r.coeffs[j] * cartan_.matrix[j][i];
    return k;
}

RootSystem build_root_system(const CartanDatum& cartan) { return RootSystem(cartan); }

Root reflect(const RootSystem& rs, const Root& gamma, const Root& alpha) {
    auto aid = rs.positive_id_of(alpha);
    if (!aid) throw InputError("reflection root is not a positive root");
    auto si = rs.simple_index_of(*aid);
    if (!si) throw InputError("reflection root is not simple");
    if (!rs.id_of(gamma)) throw InputError("cannot reflect: not a root");
    Root out = gamma;
    out.coeffs[*si] -= rs.pairing(gamma, *si);
    return out;
}

RootSet upper_set(const RootSystem& rs, int simple_index) {
    if (simple_index < 0 || simple_index >= rs.rank())
        throw InputError("simple root index out of range");
    RootSet s;
    for (int g = 0; g < rs.num_positive(); ++g)
        if (rs.positive_root(g).coeffs[simple_index] >= 1) s.set(g);
    return s;
}

RootSet upper_set(const RootSystem& rs, const Root& alpha) {
    auto aid = rs.positive_id_of(alpha);
    if (!aid) throw InputError("upper set base is not a positive root");
    auto si = rs.simple_index_of(*aid);
    if (!si) throw InputError("upper set base is not simple");
    return upper_set(rs, *si);
}

std::optional<ClosureViolation> closure_violation(const RootSystem& rs, const RootSet& s) {
    for (int a = s.next(0); a != -1; a = s.next(a + 1)) {
        Root ra = rs.root(a);
        for (int b = s.next(a); b != -1; b = s.next(b + 1)) {
            Root sum = ra;
            for (int i = 0; i < rs.rank(); ++i) sum.coeffs[i] += rs.root(b).coeffs[i];
            auto id = rs.id_of(sum);
            if (id && !s.test(*id)) return ClosureViolation{a, b, *id};
        }
    }
    return std::nullopt;
}

bool is_closed(const RootSystem& rs, const RootSet& s) { return !closure_violation(rs, s); }

bool is_closed(const RootSystem& rs, const std::vector<Root>& roots) {
    RootSet s;
    for (const Root& r : roots) {
        auto id = rs.id_of(r);
        if (!id) throw InputError("set member is not a root");
        s.set(*id);
    }
    return is_closed(rs, s);
}

std::vector<Root> partial_sum_chain(const RootSystem& rs, const Root& gamma) {
    auto gid = rs.positive_id_of(gamma);
    if (!gid) throw InputError("partial sum chain requires a positive root");

    // Simple positive ids are already in lex order (all have height 1).
    std::vector<Root> tail;
    Root cur = gamma;
    while (cur.height() > 1) {
        bool found = false;
        for (int i = 0; i < rs.rank() && !found; ++i) {
            const Root& alpha = rs.positive_root(i);
            Root rem = cur;
            for (int j = 0; j < rs.rank(); ++j) rem.coeffs[j] -= alpha.coeffs[j];
            if (auto rid = rs.id_of(rem); rid && *rid < rs.num_positive()) {
                tail.push_back(alpha);
                cur = rem;
                found = true;
            }
        }
        if (!found) throw PropertyViolation("positive root has no partial sum decomposition");
    }
    std::vector<Root> chain;
    chain.push_back(cur);
    chain.insert(chain.end(), tail.rbegin(), tail.rend());
    return chain;
}

}  // namespace hessberg
