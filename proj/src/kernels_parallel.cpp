#include <algorithm>
#include <cstdint>

#include "possreason/kernels.hpp"

namespace possreason::kernels::parallel {

namespace {
using Index = std::int64_t;
inline Index extent(std::size_t n) { return static_cast<Index>(n); }
}  // namespace

void min(std::span<const Grade> a, std::span<const Grade> b, std::span<Grade> out) {
    const Index n = extent(out.size());
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < n; ++i) out[i] = std::min(a[i], b[i]);
}

void max(std::span<const Grade> a, std::span<const Grade> b, std::span<Grade> out) {
    const Index n = extent(out.size());
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < n; ++i) out[i] = std::max(a[i], b[i]);
}

void complement(std::span<const Grade> a, std::span<Grade> out) {
    const Index n = extent(out.size());
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < n; ++i) out[i] = 1.0 - a[i];
}

void broadcast(std::span<const Grade> src, std::span<const Axis> axes, std::span<Grade> out) {
    const Index n = extent(out.size());
#pragma omp parallel for schedule(static)
    for (Index c = 0; c < n; ++c) out[c] = src[source_index(static_cast<std::size_t>(c), axes)];
}

void project_max(std::span<const Grade> src, std::span<const std::size_t> bases,
                 std::span<const std::size_t> offsets, std::span<Grade> out) {
    const Index n = extent(out.size());
#pragma omp parallel for schedule(static)
    for (Index o = 0; o < n; ++o) {
        Grade best = 0.0;
        for (std::size_t off : offsets) best = std::max(best, src[bases[o] + off]);
        out[o] = best;
    }
}

Grade max_min_axis(std::span<const Grade> r, std::span<const Grade> s, std::size_t stride) {
    const Index n = extent(r.size());
    const std::size_t m = s.size();
    Grade best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best)
    for (Index c = 0; c < n; ++c) {
        const auto cell = static_cast<std::size_t>(c);
        best = std::max(best, std::min(r[cell], s[(cell / stride) % m]));
    }
    return best;
}

Grade max_reduce(std::span<const Grade> a) {
    const Index n = extent(a.size());
    Grade best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best)
    for (Index i = 0; i < n; ++i) best = std::max(best, a[i]);
    return best;
}

}  // namespace possreason::kernels::parallel
