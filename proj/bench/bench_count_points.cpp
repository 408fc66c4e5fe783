// Compares the OpenMP point-counting kernel against the serial reference
// and reports the speedup. Counts must match exactly.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "kdiv/curve.hpp"

using namespace kdiv;

namespace {

template <typename F>
double time_ms(F&& f, std::uint64_t& out) {
    auto start = std::chrono::steady_clock::now();
    out = f();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 999983;
    const std::uint64_t curves[][2] = {{0, 1}, {1, 0}, {2, 3}};

    std::printf("point counting over F_%llu, 3 curves\n",
                static_cast<unsigned long long>(p));
    std::printf("%-14s %12s %12s %10s\n", "curve", "serial ms", "parallel ms",
                "speedup");

    bool ok = true;
    for (const auto& ab : curves) {
        CurveFp c(p, ab[0], ab[1]);
        std::uint64_t serial_count = 0, parallel_count = 0;
        double serial_ms = time_ms([&] { return count_points_serial(c); }, serial_count);
        double parallel_ms = time_ms([&] { return count_points(c); }, parallel_count);
        ok = ok && serial_count == parallel_count;
        std::printf("A=%-4llu B=%-4llu %12.1f %12.1f %9.2fx%s\n",
                    static_cast<unsigned long long>(c.A),
                    static_cast<unsigned long long>(c.B), serial_ms, parallel_ms,
                    serial_ms / parallel_ms,
                    serial_count == parallel_count ? "" : "  MISMATCH");
    }
    if (!ok) {
        std::printf("FAIL: kernel and reference disagree\n");
        return 1;
    }
    std::printf("counts identical\n");
    return 0;
}
