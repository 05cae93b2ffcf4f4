// Serial reference vs OpenMP kernels on a large dense joint space.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "possreason/relation.hpp"

using namespace possreason;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    fn();
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t vars = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 20;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 5;

    const auto u = make_universe("Bool", {"t", "f"});
    std::vector<Variable> vs;
    for (std::size_t i = 0; i < vars; ++i) vs.push_back(make_variable("x" + std::to_string(i), std::nullopt, u));
    const auto space = make_space(vs, std::size_t{1} << 30);

    std::mt19937 rng(1);
    std::uniform_real_distribution<Grade> grade(0.0, 1.0);
    std::vector<Grade> ga(space->cells()), gb(space->cells());
    for (auto& g : ga) g = grade(rng);
    for (auto& g : gb) g = grade(rng);
    const Relation a(space, ga), b(space, gb);
    const FuzzySet s(u, {0.3, 0.9});
    const std::vector<std::string> keep{"x1", "x3"};

    std::printf("cells=%zu threads=%d reps=%d\n", space->cells(), omp_get_max_threads(), reps);
    std::printf("%-16s %12s %12s %8s %s\n", "kernel", "serial ms", "parallel ms", "speedup", "identical");

    auto row = [&](const char* name, auto&& op) {
        auto rs = op(Execution::serial);
        auto rp = op(Execution::parallel);
        const double ts = time_ms([&] { (void)op(Execution::serial); }, reps);
        const double tp = time_ms([&] { (void)op(Execution::parallel); }, reps);
        std::printf("%-16s %12.3f %12.3f %8.2f %s\n", name, ts, tp, ts / tp, rs == rp ? "yes" : "NO");
    };
    row("conjoin", [&](Execution e) { return conjoin(a, b, e); });
    row("disjoin", [&](Execution e) { return disjoin(a, b, e); });
    row("complement", [&](Execution e) { return complement_rel(a, e); });
    row("extend", [&](Execution e) { return cylindrical_extend(s, "x7", space, e); });
    row("project", [&](Execution e) { return project(a, keep, e); });
    row("poss_against", [&](Execution e) { return poss_against(a, s, "x5", e); });
    row("height", [&](Execution e) { return height(a, e); });
    return 0;
}
