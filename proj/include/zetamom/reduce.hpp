#ifndef ZETAMOM_REDUCE_HPP
#define ZETAMOM_REDUCE_HPP

#include <cstddef>
#include <vector>

namespace zetamom {

// Pairwise summation in a fixed binary tree order. The reduction order
// depends only on the element order, never on thread count, so results
// are bit-identical across runs.
template <typename T>
T pairwise_sum(const std::vector<T>& v) {
    if (v.empty()) return T{};
    std::vector<T> level(v);
    while (level.size() > 1) {
        std::vector<T> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2)
            next.push_back(level[i] + level[i + 1]);
        if (level.size() % 2 == 1) next.push_back(level.back());
        level.swap(next);
    }
    return level.front();
}

}  // namespace zetamom

#endif
