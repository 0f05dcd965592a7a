#include "squarefold/search.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace squarefold::search::detail {

namespace {

/// Witnesses with first coordinate a: solve the degree equation for each
/// a' <= a and check that the leftover valence is a perfect square.
void p4_scan_row(std::vector<std::array<long long, 3>>& out, long long g, long long a) {
    for (long long ap = 5; ap <= a; ++ap) {
        const long long rhs = 10 * (g - 1) * (a + ap) + 4 * (g - 1) * (g - 1);
        const long long disc = 25 + rhs;
        const long long r = isqrt(disc);
        if (r * r != disc) continue;
        const long long n = 5 + r;
        if (n % 2 != 0) continue;
        const long long q = a * ap - n / 2;  // = g k^2
        if (q < 0 || q % g != 0 || !is_square(q / g)) continue;
        const long long k = isqrt(q / g);
        if (!(2 * k * k < a * ap)) continue;       // ampleness filter
        if (!(4 * k <= a + ap - 5)) continue;      // very-ampleness filter
        out.push_back({a, ap, k});
    }
}

}  // namespace

std::vector<std::array<long long, 3>> p4_scan_serial(long long g, long long a_max) {
    std::vector<std::array<long long, 3>> out;
    for (long long a = 5; a <= a_max; ++a) p4_scan_row(out, g, a);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<long long, 3>> p4_scan_parallel(long long g, long long a_max) {
    if (a_max < 5) return {};
    std::vector<std::vector<std::array<long long, 3>>> rows(static_cast<size_t>(a_max) + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long a = 5; a <= a_max; ++a) p4_scan_row(rows[static_cast<size_t>(a)], g, a);
    std::vector<std::array<long long, 3>> out;
    for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace squarefold::search::detail
