// One line per acceptance criterion. Every comparison is exact integer or
// rational equality; there are no tolerances.

#include "fol/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
    std::uint64_t seed = fol::kDefaultSeed;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    auto start = std::chrono::steady_clock::now();
    auto results = fol::run_suite("all", seed);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    int failed = 0;
    for (const auto& r : results) {
        const char* status = r.passed ? "PASS" : "FAIL";
        std::string note;
        if (r.report_only && r.passed) note = " (report: " + r.detail.dump() + ")";
        std::printf("%s criterion %d: %s%s\n", status, r.id, r.title.c_str(), note.c_str());
        for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
        for (const auto& f : r.flags)
            std::printf("    flag: %s (computed %s, stated %s)\n", f.location.c_str(), f.computed.dump().c_str(),
                        f.stated.dump().c_str());
        if (!r.passed) ++failed;
    }
    bool in_time = secs < 60.0;
    std::printf("%s runtime %.2fs (limit 60s)\n", in_time ? "PASS" : "FAIL", secs);
    std::printf("%d of %zu criteria failed\n", failed, results.size());
    return failed == 0 && in_time ? 0 : 1;
}
