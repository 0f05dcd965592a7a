// Timing comparison of the serial reference enumerations against the
// OpenMP kernels, with an equality check on the outputs.

#include <chrono>
#include <cstdio>

#include "squarefold/cones.hpp"
#include "squarefold/search.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
double time_call(F&& f) {
    const auto t0 = Clock::now();
    f();
    return seconds_since(t0);
}

bool same_obstructions(const std::vector<squarefold::cones::ObstructionCandidate>& x,
                       const std::vector<squarefold::cones::ObstructionCandidate>& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i].gamma != y[i].gamma || x[i].condition != y[i].condition ||
            x[i].L_dot_gamma != y[i].L_dot_gamma || x[i].gamma_sq != y[i].gamma_sq)
            return false;
    return true;
}

}  // namespace

int main() {
    using namespace squarefold;
    int failures = 0;

    {
        const lattice::CartesianClass L{Rat(21), Rat(21), Rat(8), 2};
        const long long cap = 700;
        std::vector<cones::ObstructionCandidate> serial, parallel;
        const double ts = time_call([&] {
            serial = cones::detail::scan_cartesian_serial(
                2, L, cones::ReiderMode::very_ample, cap);
        });
        const double tp = time_call([&] {
            parallel = cones::detail::scan_cartesian_parallel(
                2, L, cones::ReiderMode::very_ample, cap);
        });
        const bool ok = same_obstructions(serial, parallel);
        std::printf("obstruction scan g=2 cap=%lld: serial %.3fs, parallel %.3fs, "
                    "speedup %.2fx, outputs %s (%zu candidates)\n",
                    cap, ts, tp, tp > 0 ? ts / tp : 0.0, ok ? "equal" : "DIFFER",
                    serial.size());
        if (!ok) ++failures;
    }

    {
        const long long a_max = 4000;
        std::vector<std::array<long long, 3>> serial, parallel;
        const double ts =
            time_call([&] { serial = search::detail::p4_scan_serial(2, a_max); });
        const double tp =
            time_call([&] { parallel = search::detail::p4_scan_parallel(2, a_max); });
        const bool ok = serial == parallel;
        std::printf("P^4 bidegree scan g=2 a_max=%lld: serial %.3fs, parallel %.3fs, "
                    "speedup %.2fx, outputs %s (%zu witnesses)\n",
                    a_max, ts, tp, tp > 0 ? ts / tp : 0.0, ok ? "equal" : "DIFFER",
                    serial.size());
        if (!ok) ++failures;
    }

    return failures == 0 ? 0 : 1;
}
