// Timing comparison between the parallel kernels and the serial reference
// implementations they are tested against. Each row reports both runtimes,
// the speedup, and whether the outputs agreed.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "ffgeom/field.hpp"
#include "ffgeom/harness.hpp"
#include "ffgeom/incidence.hpp"
#include "ffgeom/motions.hpp"
#include "ffgeom/spectrum.hpp"
#include "ffgeom/vectors.hpp"

using namespace ffgeom;
using clk = std::chrono::steady_clock;

namespace {

double secs_since(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

void row(const char* kernel, const char* setting, double fast, double slow, bool agree) {
    std::printf("%-26s %-22s %10.4f s %10.4f s %8.1fx  %s\n", kernel, setting, fast, slow,
                fast > 0 ? slow / fast : 0.0, agree ? "agree" : "MISMATCH");
}

void bench_dft() {
    Field F(7, 1);
    VecSpace S(F, 4);  // 2401 points
    PointSet A = random_set_density(S, 0.4, 1);

    auto t0 = clk::now();
    Spectrum sp = dft(A);
    double fast = secs_since(t0);

    // The serial oracle computes one coefficient at a time; sample a stride.
    t0 = clk::now();
    bool agree = true;
    int64_t samples = 0;
    for (int64_t m = 0; m < S.size(); m += 7, ++samples)
        if (std::abs(sp.at(m) - ref::dft_at(A, m)) > 1e-10) agree = false;
    double slow = secs_since(t0) * (double)S.size() / (double)samples;
    row("dft", "q=7 d=4 (extrapolated)", fast, slow, agree);
}

void bench_incidences() {
    Field F(7, 1);
    VecSpace S(F, 2);
    VecSpace P2(F, 4);
    MotionSet R = all_rigid_motions(S);
    PointSet P = random_set_density(P2, 0.5, 2);

    auto t0 = clk::now();
    int64_t a = count_incidences(P, R);
    double fast = secs_since(t0);

    t0 = clk::now();
    int64_t b = ref::count_incidences(P, R);
    double slow = secs_since(t0);
    row("count_incidences", "q=7 d=2, |P|~1200", fast, slow, a == b);
}

void bench_histogram() {
    Field F(11, 1);
    VecSpace S(F, 2);
    std::vector<Mat> G = orthogonal_group(F, 2);
    PointSet A = random_set_density(S, 0.5, 3);
    PointSet B = random_set_density(S, 0.5, 4);

    auto t0 = clk::now();
    std::vector<int64_t> h;
    for (int rep = 0; rep < 50; ++rep) h = intersection_histogram(A, B, G[5]);
    double fast = secs_since(t0);

    t0 = clk::now();
    std::vector<int64_t> h2;
    for (int rep = 0; rep < 50; ++rep) h2 = ref::intersection_histogram(A, B, G[5]);
    double slow = secs_since(t0);
    row("intersection_histogram", "q=11 d=2, 50 reps", fast, slow, h == h2);
}

void bench_group() {
    Field F(5, 1);

    auto t0 = clk::now();
    std::vector<Mat> a = orthogonal_group(F, 3);
    double fast = secs_since(t0);

    t0 = clk::now();
    std::vector<Mat> b = ref::orthogonal_group_bruteforce(F, 3);
    double slow = secs_since(t0);
    row("orthogonal_group", "d=3 q=5 (|G|=240)", fast, slow, a == b);
}

void bench_quadruples() {
    Field F(5, 1);
    VecSpace S(F, 2);
    PointSet A = random_set_density(S, 0.8, 5);
    PointSet B = random_set_density(S, 0.8, 6);

    auto t0 = clk::now();
    int64_t a = 0;
    for (int rep = 0; rep < 200; ++rep) a = count_quadruples_product(A, B);
    double fast = secs_since(t0);

    t0 = clk::now();
    int64_t b = 0;
    for (int rep = 0; rep < 200; ++rep) b = ref::count_quadruples_product(A, B);
    double slow = secs_since(t0);
    row("count_quadruples_product", "q=5 d=2, 200 reps", fast, slow, a == b);
}

}  // namespace

int main() {
    std::printf("%-26s %-22s %12s %12s %9s  %s\n", "kernel", "setting", "parallel", "serial ref",
                "speedup", "check");
    bench_dft();
    bench_incidences();
    bench_histogram();
    bench_group();
    bench_quadruples();
    return 0;
}
