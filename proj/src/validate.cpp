#include "hessberg/validate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <ostream>
#include <unordered_map>

#include "hessberg/errors.hpp"
#include "hessberg/text.hpp"

namespace hessberg {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// Per-configuration slot for parallel suites; merged in index order so the
// report is independent of the schedule.
struct Slot {
    long long checked = 0;
    std::vector<std::string> failures;
};

void merge_slots(SuiteReport& rep, std::vector<Slot>& slots) {
    for (Slot& s : slots) {
        rep.checked += s.checked;
        for (std::string& f : s.failures) rep.failures.push_back(std::move(f));
    }
}

std::string pair_text(const TypeContext& ctx, int space_index, std::uint32_t mask) {
    return ctx.rs.name() + " levi={" + levi_text(mask, ctx.rs.rank()) + "} space#" +
           std::to_string(space_index);
}

std::string support_text(const RootSystem& rs, const NilpotentSupport& nilp) {
    std::string out = "{";
    bool first = true;
    for (int b = nilp.phi_n.next(0); b != -1; b = nilp.phi_n.next(b + 1)) {
        if (!first) out += ",";
        first = false;
        out += root_symbolic(rs.positive_root(b));
    }
    return out + "}";
}

std::vector<std::uint32_t> proper_levi_masks(int rank) {
    const std::uint32_t full = (std::uint32_t(1) << rank) - 1;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m <= full; ++m)
        if (m != full) masks.push_back(m);
    return masks;
}

}  // namespace

std::string SuiteReport::summary() const {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", seconds);
    std::string s = name + ": ";
    s += failures.empty() ? "PASS" : "FAIL";
    s += " (" + std::to_string(checked) + " checks, " + secs + "s)";
    if (!failures.empty()) s += ", " + std::to_string(failures.size()) + " failures";
    return s;
}

TypeContext::TypeContext(const std::string& type, long long cap)
    : rs(parse_cartan_type(type)), wg(rs, cap), spaces(enumerate_hessenberg(rs)) {}

SuiteReport agreement_suite(const TypeContext& ctx, int jobs) {
    SuiteReport rep;
    rep.name = "agreement";
    Timer timer;
    const std::vector<std::uint32_t> masks = proper_levi_masks(ctx.rs.rank());
    const long long total = static_cast<long long>(ctx.spaces.size()) * masks.size();
    std::vector<Slot> slots(total);
#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#else
    (void)jobs;
#endif
    for (long long k = 0; k < total; ++k) {
        const int si = static_cast<int>(k / masks.size());
        const std::uint32_t mask = masks[k % masks.size()];
        LeviDatum levi = make_levi(ctx.rs, mask);
        BettiTable bt = betti_numbers(ctx.wg, levi, ctx.spaces[si]);
        Slot& slot = slots[k];
        slot.checked = 1;
        if (bt.counts[0] < 1)
            slot.failures.push_back(pair_text(ctx, si, mask) + ": no zero-dimensional cell");
        const bool by_betti = connected_from_counts(bt.counts);
        const bool by_criterion = is_connected_by_criterion(ctx.rs, levi, ctx.spaces[si]);
        if (by_betti != by_criterion)
            slot.failures.push_back(pair_text(ctx, si, mask) + ": betti says " +
                                    (by_betti ? "connected" : "disconnected") +
                                    ", criterion says " +
                                    (by_criterion ? "connected" : "disconnected"));
    }
    merge_slots(rep, slots);
    rep.seconds = timer.elapsed();
    return rep;
}

SuiteReport euler_suite(const TypeContext& ctx, int jobs) {
    SuiteReport rep;
    rep.name = "euler";
    Timer timer;
    const std::uint32_t levis = std::uint32_t(1) << ctx.rs.rank();
    const long long total = static_cast<long long>(ctx.spaces.size()) * levis;
    std::vector<Slot> slots(total);
#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#else
    (void)jobs;
#endif
    for (long long k = 0; k < total; ++k) {
        const int si = static_cast<int>(k / levis);
        const std::uint32_t mask = static_cast<std::uint32_t>(k % levis);
        LeviDatum levi = make_levi(ctx.rs, mask);
        BettiTable bt = betti_numbers(ctx.wg, levi, ctx.spaces[si]);
        long long sum = 0;
        for (long long c : bt.counts) sum += c;
        Slot& slot = slots[k];
        slot.checked = 1;
        if (sum != ctx.wg.size())
            slot.failures.push_back(pair_text(ctx, si, mask) + ": betti numbers sum to " +
                                    std::to_string(sum) + ", group order is " +
                                    std::to_string(ctx.wg.size()));
    }
    merge_slots(rep, slots);
    rep.seconds = timer.elapsed();
    return rep;
}

SuiteReport witness_suite(const TypeContext& ctx) {
    SuiteReport rep;
    rep.name = "witness";
    Timer timer;
    for (std::uint32_t mask : proper_levi_masks(ctx.rs.rank())) {
        LeviDatum levi = make_levi(ctx.rs, mask);
        for (std::size_t si = 0; si < ctx.spaces.size(); ++si) {
            const HessenbergSpace& hess = ctx.spaces[si];
            const std::string where = pair_text(ctx, static_cast<int>(si), mask);
            ++rep.checked;
            if (is_connected_by_criterion(ctx.rs, levi, hess)) {
                try {
                    disconnection_witness(ctx.wg, levi, hess);
                    rep.failures.push_back(where + ": witness produced for a connected pair");
                } catch (const InputError&) {
                    // expected: connected pairs must be rejected
                }
                continue;
            }
            DisconnectionWitness dw;
            try {
                dw = disconnection_witness(ctx.wg, levi, hess);
            } catch (const std::exception& e) {
                rep.failures.push_back(where + ": witness construction failed: " + e.what());
                continue;
            }
            if (dw.v == ctx.wg.identity()) {
                rep.failures.push_back(where + ": witness is the identity");
                continue;
            }
            if (!is_minimal_coset_rep(ctx.wg, dw.v, levi))
                rep.failures.push_back(where + ": witness is not a minimal coset representative");
            // alpha must be the smallest-index simple root whose negative is
            // missing from the space.
            if (hess.neg.test(ctx.rs.simple_pos_id(dw.alpha_index)))
                rep.failures.push_back(where + ": witness root's negative lies in the space");
            for (int i = 0; i < dw.alpha_index; ++i)
                if (!hess.neg.test(ctx.rs.simple_pos_id(i)))
                    rep.failures.push_back(where + ": witness root is not the first missing one");
            if (upper_set(ctx.rs, dw.alpha_index).intersects(hess.neg))
                rep.failures.push_back(where +
                                       ": a root above the witness root has its negative in the "
                                       "space");
            const int vinv = ctx.wg.inverse(dw.v);
            for (int g = ctx.wg.inversions(dw.v).next(0); g != -1;
                 g = ctx.wg.inversions(dw.v).next(g + 1)) {
                const int img = ctx.wg.apply(vinv, g);
                if (ctx.rs.is_positive_id(img)) {
                    rep.failures.push_back(where + ": inversion not flipped by the inverse");
                    continue;
                }
                if (hess.neg.test(ctx.rs.pos_index(img)))
                    rep.failures.push_back(where + ": inverse image of an inversion lies in the "
                                                   "space");
            }
            if (cell_dimension(ctx.wg, dw.v, levi, hess) != 0)
                rep.failures.push_back(where + ": witness cell is not zero-dimensional");
        }
    }
    rep.seconds = timer.elapsed();
    return rep;
}

SuiteReport kostant_suite(const TypeContext& ctx, bool subsets) {
    SuiteReport rep;
    rep.name = "kostant";
    Timer timer;
    for (int w = 0; w < ctx.wg.size(); ++w) {
        ++rep.checked;
        try {
            const int back = weyl_from_inversions(ctx.wg, ctx.wg.inversions(w));
            if (back != w)
                rep.failures.push_back(ctx.rs.name() + " element " + word_text(ctx.wg.word(w)) +
                                       ": round trip returned " + word_text(ctx.wg.word(back)));
        } catch (const std::exception& e) {
            rep.failures.push_back(ctx.rs.name() + " element " + word_text(ctx.wg.word(w)) +
                                   ": round trip threw: " + e.what());
        }
    }
    const int m = ctx.rs.num_positive();
    if (subsets && m <= 20) {
        std::unordered_map<RootSet, int, RootSetHash> by_inversions;
        for (int w = 0; w < ctx.wg.size(); ++w) by_inversions.emplace(ctx.wg.inversions(w), w);
        const RootSet universe = ctx.rs.positive_universe();
        for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << m); ++bits) {
            ++rep.checked;
            RootSet s;
            for (int j = 0; j < m; ++j)
                if (bits >> j & 1) s.set(j);
            const bool both_closed = is_closed(ctx.rs, s) && is_closed(ctx.rs, universe.minus(s));
            const auto hit = by_inversions.find(s);
            const bool is_inversion_set = hit != by_inversions.end();
            const std::string where = ctx.rs.name() + " subset " + std::to_string(bits);
            if (both_closed != is_inversion_set)
                rep.failures.push_back(where + ": closed+co-closed is " +
                                       (both_closed ? "true" : "false") +
                                       " but inversion-set membership is " +
                                       (is_inversion_set ? "true" : "false"));
            try {
                const int w = weyl_from_inversions(ctx.wg, s);
                if (!is_inversion_set)
                    rep.failures.push_back(where + ": reconstruction accepted a non-inversion set");
                else if (w != hit->second)
                    rep.failures.push_back(where + ": reconstruction returned the wrong element");
            } catch (const InputError&) {
                if (is_inversion_set)
                    rep.failures.push_back(where + ": reconstruction rejected an inversion set");
            }
        }
    }
    rep.seconds = timer.elapsed();
    return rep;
}

SuiteReport coset_suite(const TypeContext& ctx) {
    SuiteReport rep;
    rep.name = "coset";
    Timer timer;
    const std::uint32_t levis = std::uint32_t(1) << ctx.rs.rank();
    for (std::uint32_t mask = 0; mask < levis; ++mask) {
        LeviDatum levi = make_levi(ctx.rs, mask);
        for (int w = 0; w < ctx.wg.size(); ++w) {
            ++rep.checked;
            const std::string where = ctx.rs.name() + " levi={" +
                                      levi_text(mask, ctx.rs.rank()) + "} element " +
                                      word_text(ctx.wg.word(w));
            const auto [y, v] = coset_decompose(ctx.wg, w, levi);
            if (ctx.wg.compose(y, v) != w)
                rep.failures.push_back(where + ": factors do not multiply back");
            if (!in_levi_subgroup(ctx.wg, y, levi))
                rep.failures.push_back(where + ": left factor escapes the Levi subgroup");
            if (!is_minimal_coset_rep(ctx.wg, v, levi))
                rep.failures.push_back(where + ": right factor is not a minimal representative");
            if (ctx.wg.length(y) + ctx.wg.length(v) != ctx.wg.length(w))
                rep.failures.push_back(where + ": lengths do not add");
            RootSet shifted;
            bool shifted_ok = true;
            const RootSet& inv_v = ctx.wg.inversions(v);
            for (int g = inv_v.next(0); g != -1; g = inv_v.next(g + 1)) {
                const int img = ctx.wg.apply(y, g);
                if (!ctx.rs.is_positive_id(img)) {
                    rep.failures.push_back(where + ": left factor flips an inversion of the "
                                                   "right factor");
                    shifted_ok = false;
                    break;
                }
                shifted.set(img);
            }
            if (!shifted_ok) continue;
            if (shifted.intersects(ctx.wg.inversions(y)))
                rep.failures.push_back(where + ": inversion sets of the factors overlap");
            if ((shifted | ctx.wg.inversions(y)) != ctx.wg.inversions(w))
                rep.failures.push_back(where + ": inversion sets do not partition");
        }
    }
    rep.seconds = timer.elapsed();
    return rep;
}

SuiteReport curve_suite(const TypeContext& ctx, int jobs) {
    SuiteReport rep;
    rep.name = "curve";
    Timer timer;
    const int m = ctx.rs.num_positive();
    if (m > 20) {
        rep.failures.push_back(ctx.rs.name() + ": 2^" + std::to_string(m) +
                               " supports exceed the exhaustive budget");
        rep.seconds = timer.elapsed();
        return rep;
    }
    const long long total = std::int64_t(1) << m;
    std::vector<Slot> slots(total);
#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#else
    (void)jobs;
#endif
    for (long long bits = 0; bits < total; ++bits) {
        NilpotentSupport nilp;
        for (int j = 0; j < m; ++j)
            if (bits >> j & 1) nilp.phi_n.set(j);
        Slot& slot = slots[bits];
        const std::string nname = ctx.rs.name() + " N=" + support_text(ctx.rs, nilp);
        for (std::size_t si = 0; si < ctx.spaces.size(); ++si) {
            const HessenbergSpace& hess = ctx.spaces[si];
            const std::string where = nname + " space#" + std::to_string(si);
            const std::vector<int> fps = fixed_points(ctx.wg, nilp, hess);
            ++slot.checked;
            bool has_identity = false;
            for (int w : fps) has_identity = has_identity || w == ctx.wg.identity();
            if (!has_identity) {
                slot.failures.push_back(where + ": identity is not a fixed point");
                continue;
            }
            for (int w : fps) {
                if (w == ctx.wg.identity()) continue;
                const std::string at = where + " w=" + word_text(ctx.wg.word(w));
                const RootSet mx = maximal_inversions(ctx.wg, w);
                if (mx.none()) {
                    slot.failures.push_back(at + ": no maximal inversion");
                    continue;
                }
                for (int g = mx.next(0); g != -1; g = mx.next(g + 1)) {
                    ++slot.checked;
                    try {
                        if (!curve_admissible(ctx.wg, w, g, nilp, hess))
                            slot.failures.push_back(
                                at + ": maximal inversion " +
                                root_symbolic(ctx.rs.positive_root(g)) + " is not admissible");
                    } catch (const std::exception& e) {
                        slot.failures.push_back(at + ": admissibility check threw: " + e.what());
                    }
                }
                ++slot.checked;
                try {
                    const Chain chain = connect_chain(ctx.wg, w, nilp, hess);
                    if (static_cast<int>(chain.steps.size()) > ctx.wg.length(w))
                        slot.failures.push_back(at + ": chain longer than the length budget");
                    int cur = w;
                    for (const ChainStep& step : chain.steps) {
                        if (step.w_before != cur ||
                            ctx.wg.length(step.w_after) >= ctx.wg.length(step.w_before)) {
                            slot.failures.push_back(at + ": chain steps do not descend");
                            break;
                        }
                        cur = step.w_after;
                    }
                    if (cur != ctx.wg.identity())
                        slot.failures.push_back(at + ": chain does not end at the identity");
                } catch (const std::exception& e) {
                    slot.failures.push_back(at + ": chain construction threw: " + e.what());
                }
            }
        }
    }
    merge_slots(rep, slots);
    rep.seconds = timer.elapsed();
    return rep;
}

std::vector<std::string> supported_types_up_to_rank(int max_rank) {
    std::vector<std::string> types;
    for (int r = 1; r <= max_rank; ++r) {
        types.push_back("A" + std::to_string(r));
        if (r >= 2) types.push_back("B" + std::to_string(r));
        if (r >= 3) types.push_back("C" + std::to_string(r));
        if (r >= 4) types.push_back("D" + std::to_string(r));
        if (r == 4) types.push_back("F4");
        if (r == 2) types.push_back("G2");
    }
    return types;
}

int run_validate_all(int max_rank, int jobs, std::ostream& out) {
    if (max_rank < 1 || max_rank > 4)
        throw InputError("max rank must be between 1 and 4 (space enumeration is capped there)");
    bool all_passed = true;
    long long total_checks = 0;
    const auto emit = [&](const std::string& type, const SuiteReport& rep) {
        out << type << " " << rep.summary() << "\n";
        constexpr std::size_t kShown = 8;
        for (std::size_t i = 0; i < rep.failures.size() && i < kShown; ++i)
            out << "  " << rep.failures[i] << "\n";
        if (rep.failures.size() > kShown)
            out << "  ... and " << rep.failures.size() - kShown << " more\n";
        all_passed = all_passed && rep.passed();
        total_checks += rep.checked;
    };
    for (const std::string& type : supported_types_up_to_rank(max_rank)) {
        TypeContext ctx(type);
        const int m = ctx.rs.num_positive();
        emit(type, agreement_suite(ctx, jobs));
        emit(type, euler_suite(ctx, jobs));
        emit(type, witness_suite(ctx));
        emit(type, kostant_suite(ctx, m <= 9));
        emit(type, coset_suite(ctx));
        if (m <= 6)
            emit(type, curve_suite(ctx, jobs));
        else
            out << type << " curve: SKIP (2^" << m << " supports exceed the exhaustive budget)\n";
    }
    out << (all_passed ? "all suites passed" : "suite failures detected") << " ("
        << total_checks << " checks)\n";
    return all_passed ? 0 : 2;
}

}  // namespace hessberg
