#include "symext/dbar.hpp"

#include "symext/errors.hpp"

#include <numeric>
#include <optional>

namespace symext {

Rational dbar_periodic(const PeriodicOrbit& a, const PeriodicOrbit& b) {
    if (!(a.alphabet() == b.alphabet())) throw ArgumentError("orbits over different alphabets");
    const std::int64_t p = a.minimal_period(), q = b.minimal_period();
    const std::int64_t l = std::lcm(p, q);
    std::int64_t best = l;
    for (std::int64_t r = 0; r < l && best > 0; ++r) {
        std::int64_t miss = 0;
        for (std::int64_t i = 0; i < l && miss < best; ++i) miss += a.at(i) != b.at(i + r);
        best = std::min(best, miss);
    }
    return Rational(best, l);
}

DbarBound min_cost_transport(const std::vector<Rational>& supply, const std::vector<Rational>& demand,
                             const std::vector<std::vector<Rational>>& cost) {
    const std::size_t m = supply.size(), n = demand.size();
    if (cost.size() != m) throw ArgumentError("cost matrix row count mismatch");
    for (const auto& row : cost)
        if (row.size() != n) throw ArgumentError("cost matrix column count mismatch");
    Rational total_s = std::accumulate(supply.begin(), supply.end(), Rational(0));
    Rational total_d = std::accumulate(demand.begin(), demand.end(), Rational(0));
    if (total_s != total_d) throw ArgumentError("supply and demand totals differ");

    // Successive shortest paths on the bipartite residual network; nodes 0..m-1 sources, m..m+n-1 sinks.
    std::vector<std::vector<Rational>> flow(m, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> s_left = supply, d_left = demand;
    const std::size_t N = m + n;
    for (;;) {
        // Bellman-Ford from all sources with remaining supply.
        std::vector<std::optional<Rational>> dist(N);
        std::vector<int> parent(N, -1);
        for (std::size_t i = 0; i < m; ++i)
            if (s_left[i] > 0) dist[i] = Rational(0);
        bool any_source = false;
        for (std::size_t i = 0; i < m; ++i) any_source |= s_left[i] > 0;
        if (!any_source) break;
        for (std::size_t round = 0; round < N; ++round) {
            bool changed = false;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    // forward edge i -> j (uncapacitated), backward j -> i when flow > 0
                    if (dist[i] && (!dist[m + j] || *dist[i] + cost[i][j] < *dist[m + j])) {
                        dist[m + j] = *dist[i] + cost[i][j];
                        parent[m + j] = static_cast<int>(i);
                        changed = true;
                    }
                    if (flow[i][j] > 0 && dist[m + j] && (!dist[i] || *dist[m + j] - cost[i][j] < *dist[i])) {
                        dist[i] = *dist[m + j] - cost[i][j];
                        parent[i] = static_cast<int>(m + j);
                        changed = true;
                    }
                }
            if (!changed) break;
        }
        std::optional<std::size_t> sink;
        for (std::size_t j = 0; j < n; ++j)
            if (d_left[j] > 0 && dist[m + j] && (!sink || *dist[m + j] < *dist[m + *sink])) sink = j;
        if (!sink) throw InternalError("transport: no augmenting path");
        // Bottleneck along the path.
        Rational amount = d_left[*sink];
        std::size_t v = m + *sink;
        while (parent[v] >= 0) {
            auto u = static_cast<std::size_t>(parent[v]);
            if (u >= m) amount = std::min(amount, flow[v][u - m]);  // backward edge sink u -> source v
            v = u;
        }
        amount = std::min(amount, s_left[v]);
        const std::size_t src = v;
        v = m + *sink;
        while (parent[v] >= 0) {
            auto u = static_cast<std::size_t>(parent[v]);
            if (u < m)
                flow[u][v - m] += amount;
            else
                flow[v][u - m] -= amount;
            v = u;
        }
        s_left[src] -= amount;
        d_left[*sink] -= amount;
    }
    DbarBound out;
    out.value = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out.value += flow[i][j] * cost[i][j];
    out.plan = std::move(flow);
    return out;
}

namespace {

void check_weights(const Mixture& mix, const char* name) {
    if (mix.parts.empty()) throw ArgumentError(std::string(name) + ": empty mixture");
    Rational total(0);
    for (const auto& [w, orbit] : mix.parts) {
        if (w < 0) throw ArgumentError(std::string(name) + ": negative weight");
        total += w;
    }
    if (total != 1) throw ArgumentError(std::string(name) + ": weights sum to " + to_string(total) + ", not 1");
}

}  // namespace

DbarBound dbar_mixture(const Mixture& mu, const Mixture& nu) {
    check_weights(mu, "first mixture");
    check_weights(nu, "second mixture");
    std::vector<Rational> supply, demand;
    std::vector<std::vector<Rational>> cost;
    for (const auto& [w, a] : mu.parts) {
        supply.push_back(w);
        cost.emplace_back();
        for (const auto& [v, b] : nu.parts) cost.back().push_back(dbar_periodic(a, b));
    }
    for (const auto& [v, b] : nu.parts) demand.push_back(v);
    return min_cost_transport(supply, demand, cost);
}

}  // namespace symext
