#include "symext/transfer.hpp"

#include "symext/errors.hpp"

#include <algorithm>
#include <functional>

namespace symext {

std::vector<std::vector<int>> strongly_connected_components(const LanguageGraph& g) {
    const int n = static_cast<int>(g.states.size());
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0), stack;
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> comps;
    int counter = 0;
    // Iterative Tarjan to avoid deep recursion on large graphs.
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] >= 0) continue;
        std::vector<std::pair<int, std::size_t>> call{{root, 0}};
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = 1;
        while (!call.empty()) {
            auto& [u, next] = call.back();
            const auto& su = g.succ[static_cast<std::size_t>(u)];
            if (next < su.size()) {
                int v = su[next++];
                auto vi = static_cast<std::size_t>(v);
                if (index[vi] < 0) {
                    index[vi] = low[vi] = counter++;
                    stack.push_back(v);
                    on_stack[vi] = 1;
                    call.emplace_back(v, 0);
                } else if (on_stack[vi]) {
                    low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], index[vi]);
                }
                continue;
            }
            const int done = u;
            call.pop_back();
            if (!call.empty()) {
                auto p = static_cast<std::size_t>(call.back().first);
                low[p] = std::min(low[p], low[static_cast<std::size_t>(done)]);
            }
            if (low[static_cast<std::size_t>(done)] == index[static_cast<std::size_t>(done)]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
        }
    }
    return comps;
}

TopEntropy top_entropy(const SftSpec& sft, double tol, int max_iterations) {
    if (!(tol > 0)) throw ArgumentError("entropy tolerance must be positive");
    const auto& g = sft.graph();
    if (g.states.empty()) throw ArgumentError("subshift has empty language");
    const auto a = transfer_matrix<double>(g);
    TopEntropy out;
    bool any = false;
    for (const auto& comp : strongly_connected_components(g)) {
        const auto m = static_cast<Eigen::Index>(comp.size());
        MatrixX<double> sub(m, m);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j) sub(i, j) = a(comp[static_cast<std::size_t>(i)], comp[static_cast<std::size_t>(j)]);
        if (sub.sum() == 0) continue;  // a transient state, no cycle
        auto r = spectral_radius_bounds(sub, tol, max_iterations);
        Bracket b;
        if (r.exact) {
            auto k = static_cast<std::uint64_t>(std::llround(r.lo));
            b = log2_bracket(k);
        } else {
            // Every cycle-carrying component has rho >= 1.
            double lo = std::max(r.lo, 1.0), hi = std::max(r.hi, 1.0);
            b = outward(std::log2(lo) - 1e-12, std::log2(hi) + 1e-12);
            if (b.lo < 0) b.lo = 0;
            b.converged = to_double(b.width()) <= tol + 1e-9;
        }
        out.iterations = std::max(out.iterations, r.iterations);
        out.bits = any ? max(out.bits, b) : b;
        any = true;
    }
    if (!any) throw InternalError("essential language graph without cycles");
    out.converged = out.bits.converged && to_double(out.bits.width()) <= tol + 1e-9;
    return out;
}

}  // namespace symext
