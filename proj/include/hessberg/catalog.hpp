#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hessberg/semisimple.hpp"

namespace hessberg {

// One catalog row: a (space, Levi) pair with its Betti data, the two
// connectedness verdicts, and the witness when disconnected. Row order is
// fixed: spaces in enumeration order, Levi masks ascending within a space.
struct CatalogRow {
    int space_index = 0;
    std::uint32_t levi_mask = 0;
    std::vector<long long> betti;
    std::string poincare;
    bool conn_betti = false;
    bool conn_criterion = false;
    bool agree = false;
    bool has_witness = false;
    int witness_alpha = -1;
    int witness_v = -1;
};

CatalogRow catalog_row(const WeylGroup& wg, const std::vector<HessenbergSpace>& spaces,
                       int space_index, std::uint32_t levi_mask);

// Reference implementation: one plain loop in row order.
std::vector<CatalogRow> catalog_rows_serial(const WeylGroup& wg,
                                            const std::vector<HessenbergSpace>& spaces);

// Same rows computed with an OpenMP parallel loop writing into preassigned
// slots; jobs <= 0 means the OpenMP default. Output is byte-identical to the
// serial path by construction.
std::vector<CatalogRow> catalog_rows_parallel(const WeylGroup& wg,
                                              const std::vector<HessenbergSpace>& spaces,
                                              int jobs);

std::string catalog_csv(const WeylGroup& wg, const std::vector<HessenbergSpace>& spaces,
                        const std::vector<CatalogRow>& rows);
std::string catalog_json(const WeylGroup& wg, const std::vector<HessenbergSpace>& spaces,
                         const std::vector<CatalogRow>& rows);
std::string catalog_text(const WeylGroup& wg, const std::vector<HessenbergSpace>& spaces,
                         const std::vector<CatalogRow>& rows);

std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_line(std::string_view bytes);  // "fnv1a64:<16 hex>"

// Shared serialization pieces, also used by the CLI so every emitter agrees
// on the byte layout.
std::string csv_quote(const std::string& field);                  // RFC 4180, quoted only if needed
std::string counts_vector_text(const std::vector<long long>& v);  // "[1,4,1,0]"
std::string space_vector_text(const RootSystem& rs, const HessenbergSpace& hess);  // "[[-1,0],[0,-1]]"

}  // namespace hessberg
