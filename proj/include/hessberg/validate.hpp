#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hessberg/catalog.hpp"
#include "hessberg/nilpotent.hpp"
#include "hessberg/semisimple.hpp"

namespace hessberg {

// Result of one exhaustive property suite. Failure messages are produced in
// a fixed configuration order, so reports are deterministic.
struct SuiteReport {
    std::string name;
    long long checked = 0;
    std::vector<std::string> failures;
    double seconds = 0.0;

    bool passed() const { return failures.empty(); }
    std::string summary() const;
};

// Everything the suites need for one Cartan type.
struct TypeContext {
    RootSystem rs;
    WeylGroup wg;
    std::vector<HessenbergSpace> spaces;

    explicit TypeContext(const std::string& type, long long cap = WeylGroup::kDefaultCap);
};

// Betti verdict equals the combinatorial criterion on every (proper Levi,
// space) pair; also checks the reverse reading (an extra zero-dimensional
// cell forces a missing negative simple root).
SuiteReport agreement_suite(const TypeContext& ctx, int jobs);

// Betti numbers sum to |W| on every (Levi, space) pair, full Levi included.
SuiteReport euler_suite(const TypeContext& ctx, int jobs);

// Witness soundness on every disconnected pair: nonidentity, minimal coset
// representative, zero-dimensional cell, and the two emptiness conditions
// that force the extra component.
SuiteReport witness_suite(const TypeContext& ctx);

// Inversion-set reconstruction: round trip over the whole group, and, when
// subsets is set, all 2^|positive| subsets checked against a brute-force
// scan (closed and co-closed subsets are exactly the inversion sets).
SuiteReport kostant_suite(const TypeContext& ctx, bool subsets);

// Coset factorization contract on every (element, Levi subset) pair.
SuiteReport coset_suite(const TypeContext& ctx);

// Curve-step admissibility and descent chains across all nilpotent supports,
// spaces and fixed points. Exponential in |positive|; callers gate the size.
SuiteReport curve_suite(const TypeContext& ctx, int jobs);

// Runs every suite on all supported types of rank <= max_rank (at most 4,
// the space-enumeration guard), writing one line per suite to out. Returns
// 0 when everything passed, 2 otherwise.
int run_validate_all(int max_rank, int jobs, std::ostream& out);

// Supported type names with rank <= max_rank, deterministic order.
std::vector<std::string> supported_types_up_to_rank(int max_rank);

}  // namespace hessberg
