// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <evoalg/error.hpp>
#include <evoalg/suites.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <thread>

int main() {
    const char* suites[] = {"example31", "thm22", "thm23", "oracle", "thm31", "thm32", "thm41", "eq42", "determinism"};
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    int failures = 0;
    for (int i = 0; i < 9; ++i) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            const evoalg::SuiteResult r = evoalg::run_suite(suites[i], threads);
            ok = r.passed();
            for (const auto& c : r.checks)
                if (!c.passed) note += "\n    failed: " + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]");
        } catch (const std::exception& e) {
            note = std::string("\n    exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s (%s, %.2f s)%s\n", i + 1, ok ? "PASS" : "FAIL", suites[i], secs, note.c_str());
        failures += ok ? 0 : 1;
    }
    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
