// Timings for the hot paths, comparing the serial reference loops with the
// OpenMP kernels. Row payloads are asserted byte-identical, so this doubles
// as a quick determinism smoke check.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <iostream>

#include "hessberg/catalog.hpp"
#include "hessberg/validate.hpp"

using namespace hessberg;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds_since(t0);
}

void report(const char* label, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", label, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
    std::printf("OpenMP enabled, %d thread(s)\n", threads);
#else
    std::printf("OpenMP disabled, serial fallbacks only\n");
#endif

    const double f4 = timed([] {
        RootSystem rs(parse_cartan_type("F4"));
        WeylGroup wg(rs);
        if (wg.size() != 1152) {
            std::fprintf(stderr, "F4 enumeration produced %d elements\n", wg.size());
            std::exit(1);
        }
    });
    std::printf("%-28s %8.3fs (1152 elements with inversion sets)\n", "W(F4) enumeration", f4);

    {
        TypeContext ctx("A3");
        std::vector<CatalogRow> serial_rows, parallel_rows;
        const double ts = timed([&] { serial_rows = catalog_rows_serial(ctx.wg, ctx.spaces); });
        const double tp =
            timed([&] { parallel_rows = catalog_rows_parallel(ctx.wg, ctx.spaces, 0); });
        const std::string a = catalog_csv(ctx.wg, ctx.spaces, serial_rows);
        const std::string b = catalog_csv(ctx.wg, ctx.spaces, parallel_rows);
        if (a != b) {
            std::fprintf(stderr, "A3 catalog: serial and parallel rows differ\n");
            return 1;
        }
        report("A3 catalog (112 rows)", ts, tp);
        std::printf("%-28s %s\n", "A3 catalog digest", digest_line(a).c_str());
    }

    {
        TypeContext ctx("G2");
        SuiteReport serial_rep, parallel_rep;
        const double ts = timed([&] { serial_rep = curve_suite(ctx, 1); });
        const double tp = timed([&] { parallel_rep = curve_suite(ctx, 0); });
        if (!serial_rep.passed() || !parallel_rep.passed() ||
            serial_rep.checked != parallel_rep.checked) {
            std::fprintf(stderr, "G2 curve suite mismatch between serial and parallel runs\n");
            return 1;
        }
        report("G2 curve suite", ts, tp);
    }
    return 0;
}
