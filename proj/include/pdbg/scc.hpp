#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pdbg::detail {

/// Iterative Tarjan over an arbitrary successor view. `neighbors(v)` must
/// return a span of successor node ids. Returns one component id per node;
/// ids are assigned in completion order (reverse topological).
template <class NeighborsFn>
std::vector<std::int32_t> tarjan_scc(std::size_t n, NeighborsFn neighbors,
                                     std::int32_t* component_count = nullptr) {
    constexpr std::int32_t kUnvisited = -1;
    std::vector<std::int32_t> index(n, kUnvisited);
    std::vector<std::int32_t> lowlink(n, 0);
    std::vector<std::int32_t> comp(n, kUnvisited);
    std::vector<char> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    std::int32_t next_index = 0;
    std::int32_t next_comp = 0;

    struct Frame {
        std::uint32_t node;
        std::size_t child;
    };
    std::vector<Frame> frames;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        frames.push_back({static_cast<std::uint32_t>(root), 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            std::uint32_t v = f.node;
            if (f.child == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            auto succ = neighbors(v);
            bool descended = false;
            while (f.child < succ.size()) {
                std::uint32_t w = succ[f.child++];
                if (index[w] == kUnvisited) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w] && index[w] < lowlink[v]) lowlink[v] = index[w];
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                while (true) {
                    std::uint32_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = next_comp;
                    if (w == v) break;
                }
                ++next_comp;
            }
            frames.pop_back();
            if (!frames.empty()) {
                std::uint32_t parent = frames.back().node;
                if (lowlink[v] < lowlink[parent]) lowlink[parent] = lowlink[v];
            }
        }
    }
    if (component_count) *component_count = next_comp;
    return comp;
}

}  // namespace pdbg::detail
