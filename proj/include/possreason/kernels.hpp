#pragma once

// Dense cell-scan kernels behind the relational algebra.
//
// Every kernel has a serial reference and an OpenMP variant. Only min, max and
// 1-x are applied to grades, so both variants produce bit-identical results
// regardless of scheduling or reduction order.

#include <cstddef>
#include <span>
#include <vector>

#include "possreason/fuzzy_set.hpp"

namespace possreason::kernels {

/// One axis of a broadcast: extent, stride in the output layout, stride in the source (0 if absent).
struct Axis {
    std::size_t size;
    std::size_t out_stride;
    std::size_t src_stride;
};

inline std::size_t source_index(std::size_t cell, std::span<const Axis> axes) {
    std::size_t idx = 0;
    for (const auto& ax : axes) idx += ((cell / ax.out_stride) % ax.size) * ax.src_stride;
    return idx;
}

namespace serial {

void min(std::span<const Grade> a, std::span<const Grade> b, std::span<Grade> out);
void max(std::span<const Grade> a, std::span<const Grade> b, std::span<Grade> out);
void complement(std::span<const Grade> a, std::span<Grade> out);
/// out[c] = src[source_index(c, axes)]
void broadcast(std::span<const Grade> src, std::span<const Axis> axes, std::span<Grade> out);
/// out[o] = max_e src[bases[o] + offsets[e]]
void project_max(std::span<const Grade> src, std::span<const std::size_t> bases,
                 std::span<const std::size_t> offsets, std::span<Grade> out);
/// max_c min(r[c], s[(c / stride) % s.size()])
Grade max_min_axis(std::span<const Grade> r, std::span<const Grade> s, std::size_t stride);
Grade max_reduce(std::span<const Grade> a);

}  // namespace serial

namespace parallel {

void min(std::span<const Grade> a, std::span<const Grade> b, std::span<Grade> out);
void max(std::span<const Grade> a, std::span<const Grade> b, std::span<Grade> out);
void complement(std::span<const Grade> a, std::span<Grade> out);
void broadcast(std::span<const Grade> src, std::span<const Axis> axes, std::span<Grade> out);
void project_max(std::span<const Grade> src, std::span<const std::size_t> bases,
                 std::span<const std::size_t> offsets, std::span<Grade> out);
Grade max_min_axis(std::span<const Grade> r, std::span<const Grade> s, std::size_t stride);
Grade max_reduce(std::span<const Grade> a);

}  // namespace parallel

enum class Execution { serial, parallel, automatic };

/// Cell count from which `automatic` switches to the OpenMP kernels.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 15;

inline bool use_parallel(Execution exec, std::size_t cells) {
    return exec == Execution::parallel || (exec == Execution::automatic && cells >= kParallelThreshold);
}

}  // namespace possreason::kernels
