#include "domino/graph.hpp"

#include <algorithm>
#include <utility>

namespace domino {

std::vector<int> strongly_connected_components(const Digraph& g, int* count) {
    const int n = static_cast<int>(g.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on(n, 0);
    int counter = 0, ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<std::pair<int, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on[root] = 1;
        while (!call.empty()) {
            auto& [v, k] = call.back();
            if (k < g[v].size()) {
                int w = g[v][k++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on[w] = 1;
                    call.push_back({w, 0});
                } else if (on[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const int done = v;
            if (low[done] == index[done]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on[w] = 0;
                    comp[w] = ncomp;
                } while (w != done);
                ++ncomp;
            }
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    // renumber by least vertex
    std::vector<int> order(ncomp, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (order[comp[v]] < 0) order[comp[v]] = next++;
    for (auto& c : comp) c = order[c];
    if (count) *count = ncomp;
    return comp;
}

}  // namespace domino
