#include "hessberg/catalog.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "hessberg/text.hpp"

namespace hessberg {

CatalogRow catalog_row(const WeylGroup& wg, const std::vector<HessenbergSpace>& spaces,
                       int space_index, std::uint32_t levi_mask) {
    const RootSystem& rs = wg.root_system();
    const HessenbergSpace& hess = spaces[space_index];
    LeviDatum levi = make_levi(rs, levi_mask);

    CatalogRow row;
    row.space_index = space_index;
    row.levi_mask = levi_mask;
    BettiTable t = betti_numbers(wg, levi, hess);
    row.betti = t.counts;
    row.poincare = poincare_polynomial(t.counts);
    row.conn_betti = connected_from_counts(t.counts);
    row.conn_criterion = is_connected_by_criterion(rs, levi, hess);
    row.agree = row.conn_betti == row.conn_criterion;
    if (!row.conn_criterion && !levi_is_full(rs, levi)) {
        DisconnectionWitness w = disconnection_witness(wg, levi, hess);
        row.has_witness = true;
        row.witness_alpha = w.alpha_index;
        row.witness_v = w.v;
    }
    return row;
}

std::vector<CatalogRow> catalog_rows_serial(const WeylGroup& wg,
                                            const std::vector<HessenbergSpace>& spaces) {
    const std::uint32_t levis = std::uint32_t(1) << wg.root_system().rank();
    std::vector<CatalogRow> rows;
    rows.reserve(spaces.size() * levis);
    for (std::size_t s = 0; s < spaces.size(); ++s)
        for (std::uint32_t mask = 0; mask < levis; ++mask)
            rows.push_back(catalog_row(wg, spaces, static_cast<int>(s), mask));
    return rows;
}

std::vector<CatalogRow> catalog_rows_parallel(const WeylGroup& wg,
                                              const std::vector<HessenbergSpace>& spaces,
                                              int jobs) {
    const std::uint32_t levis = std::uint32_t(1) << wg.root_system().rank();
    const long long total = static_cast<long long>(spaces.size()) * levis;
    std::vector<CatalogRow> rows(total);
#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long k = 0; k < total; ++k)
        rows[k] = catalog_row(wg, spaces, static_cast<int>(k / levis),
                              static_cast<std::uint32_t>(k % levis));
#else
    (void)jobs;
    for (long long k = 0; k < total; ++k)
        rows[k] = catalog_row(wg, spaces, static_cast<int>(k / levis),
                              static_cast<std::uint32_t>(k % levis));
#endif
    return rows;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

std::string counts_vector_text(const std::vector<long long>& counts) {
    std::string out = "[";
    for (std::size_t i = 0; i < counts.size(); ++i)
        out += (i ? "," : "") + std::to_string(counts[i]);
    return out + "]";
}

std::string space_vector_text(const RootSystem& rs, const HessenbergSpace& hess) {
    std::string out = "[";
    bool first = true;
    for (int b = hess.neg.next(0); b != -1; b = hess.neg.next(b + 1)) {
        if (!first) out += ",";
        first = false;
        out += root_vector_text(rs.positive_root(b).negated());
    }
    return out + "]";
}

std::string catalog_csv(const WeylGroup& wg, const std::vector<HessenbergSpace>& spaces,
                        const std::vector<CatalogRow>& rows) {
    const RootSystem& rs = wg.root_system();
    std::string out = "cartan,levi,hess,betti,poincare,conn_betti,conn_criterion,witness,agree\n";
    for (const CatalogRow& row : rows) {
        out += csv_quote(rs.name());
        out += ",";
        out += csv_quote(levi_text(row.levi_mask, rs.rank()));
        out += ",";
        out += csv_quote(space_vector_text(rs, spaces[row.space_index]));
        out += ",";
        out += csv_quote(counts_vector_text(row.betti));
        out += ",";
        out += csv_quote(row.poincare);
        out += ",";
        out += row.conn_betti ? "true" : "false";
        out += ",";
        out += row.conn_criterion ? "true" : "false";
        out += ",";
        out += csv_quote(row.has_witness ? word_text(wg.word(row.witness_v)) : "");
        out += ",";
        out += row.agree ? "true" : "false";
        out += "\n";
    }
    return out;
}

std::string catalog_json(const WeylGroup& wg, const std::vector<HessenbergSpace>& spaces,
                         const std::vector<CatalogRow>& rows) {
    const RootSystem& rs = wg.root_system();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CatalogRow& row : rows) {
        nlohmann::ordered_json j;
        j["cartan"] = rs.name();
        nlohmann::ordered_json levi = nlohmann::ordered_json::array();
        for (int i = 0; i < rs.rank(); ++i)
            if ((row.levi_mask >> i) & 1) levi.push_back(i + 1);
        j["levi"] = levi;
        nlohmann::ordered_json hess = nlohmann::ordered_json::array();
        const HessenbergSpace& sp = spaces[row.space_index];
        for (int b = sp.neg.next(0); b != -1; b = sp.neg.next(b + 1))
            hess.push_back(rs.positive_root(b).negated().coeffs);
        j["hess"] = hess;
        j["betti"] = row.betti;
        j["poincare"] = row.poincare;
        j["conn_betti"] = row.conn_betti;
        j["conn_criterion"] = row.conn_criterion;
        if (row.has_witness) {
            nlohmann::ordered_json w;
            w["alpha"] = rs.positive_root(rs.simple_pos_id(row.witness_alpha)).coeffs;
            w["v"] = word_text(wg.word(row.witness_v));
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        j["agree"] = row.agree;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string catalog_text(const WeylGroup& wg, const std::vector<HessenbergSpace>& spaces,
                         const std::vector<CatalogRow>& rows) {
    const RootSystem& rs = wg.root_system();
    std::string out;
    for (const CatalogRow& row : rows) {
        out += rs.name();
        out += "  levi=(" + levi_text(row.levi_mask, rs.rank()) + ")";
        out += "  hess=" + space_vector_text(rs, spaces[row.space_index]);
        out += "  betti=" + counts_vector_text(row.betti);
        out += "  connected=";
        out += row.conn_betti ? "yes" : "no";
        if (row.has_witness)
            out += "  witness=" + word_text(wg.word(row.witness_v));
        if (!row.agree) out += "  DISAGREE";
        out += "\n";
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string digest_line(std::string_view bytes) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out = "fnv1a64:";
    for (int i = 15; i >= 0; --i) out += hex[(h >> (4 * i)) & 0xF];
    return out;
}

}  // namespace hessberg
