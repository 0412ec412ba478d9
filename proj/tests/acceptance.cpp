// One PASS/FAIL line per acceptance criterion. Every criterion is exact;
// the only tolerance is the wall-clock limit next to each one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "metacomm/verify.hpp"

using namespace metacomm;

namespace {

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<verify::Result()> run;
};

}  // namespace

int main() {
    const verify::Options opt;  // seed 0, full ranges, one job
    const std::vector<Criterion> criteria{
        {1, "worked metacommutation example", 1.0, [] { return verify::worked_example(); }},
        {2, "single-block cycle counts", 120.0, [&] { return verify::fripertinger(opt); }},
        {3, "fixed-point count", 120.0, [&] { return verify::fixedpoints(opt); }},
        {4, "GL2 cycle length", 60.0, [&] { return verify::gl2(opt); }},
        {5, "diagonalizable uniform cycles", 120.0, [&] { return verify::diagonalizable(opt); }},
        {6, "subexp identity", 60.0, [&] { return verify::subexp(opt); }},
        {7, "matrix diagram", 180.0, [&] { return verify::diagram_z(opt); }},
        {8, "Hurwitz diagram", 300.0, [&] { return verify::diagram_h(opt); }},
        {9, "permutation algebra", 120.0, [&] { return verify::permutation_algebra(opt); }},
        {10, "reordered factorizations", 180.0, [&] { return verify::reorder(opt); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        verify::Result r;
        std::string error;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = error.empty() && r.passed() && secs < c.limit_s;
        failures += !ok;
        std::printf("%s criterion %d (%s): cases=%llu failed=%llu time=%.3fs limit=%.0fs\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    static_cast<unsigned long long>(r.cases), static_cast<unsigned long long>(r.failed), secs, c.limit_s);
        if (!error.empty()) std::printf("  error: %s\n", error.c_str());
        for (const auto& w : r.witnesses) std::printf("  witness: %s\n", w.c_str());
        for (const auto& n : r.notes) std::printf("  note: %s\n", n.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
