#include <algorithm>

#include "possreason/kernels.hpp"

namespace possreason::kernels::serial {

void min(std::span<const Grade> a, std::span<const Grade> b, std::span<Grade> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(a[i], b[i]);
}

void max(std::span<const Grade> a, std::span<const Grade> b, std::span<Grade> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
}

void complement(std::span<const Grade> a, std::span<Grade> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = 1.0 - a[i];
}

void broadcast(std::span<const Grade> src, std::span<const Axis> axes, std::span<Grade> out) {
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = src[source_index(c, axes)];
}

void project_max(std::span<const Grade> src, std::span<const std::size_t> bases,
                 std::span<const std::size_t> offsets, std::span<Grade> out) {
    for (std::size_t o = 0; o < out.size(); ++o) {
        Grade best = 0.0;
        for (std::size_t off : offsets) best = std::max(best, src[bases[o] + off]);
        out[o] = best;
    }
}

Grade max_min_axis(std::span<const Grade> r, std::span<const Grade> s, std::size_t stride) {
    Grade best = 0.0;
    for (std::size_t c = 0; c < r.size(); ++c) {
        best = std::max(best, std::min(r[c], s[(c / stride) % s.size()]));
    }
    return best;
}

Grade max_reduce(std::span<const Grade> a) {
    Grade best = 0.0;
    for (Grade g : a) best = std::max(best, g);
    return best;
}

}  // namespace possreason::kernels::serial
