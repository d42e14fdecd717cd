#include "hyperrig/matroid_union.hpp"

#include <algorithm>

namespace hyperrig {

std::vector<int> matroid_partition(int m, int t, const IndependenceOracle& independent)
{
    std::vector<int> part(m, -1);
    std::vector<std::vector<int>> parts(t);
    auto move = [&](int y, int to) {
        if (part[y] >= 0) {
            auto& p = parts[part[y]];
            p.erase(std::find(p.begin(), p.end(), y));
        }
        part[y] = to;
        if (to >= 0) parts[to].push_back(y);
    };

    for (int x = 0; x < m; ++x) {
        // prev[z]: element that replaces z along the path; -1 marks the root, -2 unvisited.
        std::vector<int> prev(m, -2);
        std::vector<int> queue{x};
        prev[x] = -1;
        int sink = -1;
        int sink_part = -1;
        for (std::size_t qi = 0; qi < queue.size() && sink < 0; ++qi) {
            const int y = queue[qi];
            for (int i = 0; i < t && sink < 0; ++i) {
                if (part[y] == i) continue;
                std::vector<int> grown = parts[i];
                grown.push_back(y);
                if (independent(grown)) {
                    sink = y;
                    sink_part = i;
                    break;
                }
                for (int z : parts[i]) {
                    if (prev[z] != -2) continue;
                    std::vector<int> swapped;
                    for (int w : parts[i])
                        if (w != z) swapped.push_back(w);
                    swapped.push_back(y);
                    if (independent(swapped)) {
                        prev[z] = y;
                        queue.push_back(z);
                    }
                }
            }
        }
        if (sink < 0) continue;
        int target = sink_part;
        for (int y = sink; y != -1; y = prev[y]) {
            int old = part[y];
            move(y, target);
            target = old;
        }
    }
    return part;
}

}  // namespace hyperrig
