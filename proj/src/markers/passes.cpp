#include "symext/markers/passes.hpp"

#include "symext/errors.hpp"

#include <algorithm>
#include <iterator>
#include <optional>

namespace symext {

void MarkerSchedule::check_growth() const {
    for (std::size_t k = 0; k + 1 < n.size(); ++k)
        if (n[k + 1] < 3 * (2 * n[k] + 1))
            throw ArgumentError("schedule row " + std::to_string(k + 2) + ": n=" + std::to_string(n[k + 1]) + " < 3(2*" +
                                std::to_string(n[k]) + "+1)");
}

std::vector<std::pair<int, int>> adjusted_gap_bounds(const std::vector<int>& n) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t k = 0; k < n.size(); ++k) {
        const int shift = k == 0 ? 0 : out.back().second - 1;
        out.emplace_back(n[k] - shift, 2 * n[k] + 1 + shift);
    }
    return out;
}

std::vector<std::pair<int, int>> subdivision_bounds(const std::vector<int>& m) {
    std::vector<std::pair<int, int>> out;
    int acc = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
        const int slack = k == 0 ? 0 : acc + static_cast<int>(k);
        out.emplace_back(m[k] - slack, m[k] + 1 + slack);
        acc += m[k];
    }
    return out;
}

namespace {

void check_row(const ArrayWindow& w, int k) {
    if (k < 1 || k > w.depth()) throw ArgumentError("row " + std::to_string(k) + " outside 1.." + std::to_string(w.depth()));
}

struct Stretch {
    int a, b, p;
};

// Maximal p-periodic column ranges (p < n) of length >= min_len, with nested ones removed.
std::vector<Stretch> long_stretches(const ArrayWindow& w, int k, int n, int min_len) {
    const int W = w.width();
    std::vector<Stretch> cand;
    for (int p = 1; p < n; ++p) {
        int t = 0;
        while (t + p < W) {
            if (!columns_equal(w, k, t, t + p)) {
                ++t;
                continue;
            }
            const int s = t;
            while (t + p < W && columns_equal(w, k, t, t + p)) ++t;
            const int a = s, b = t - 1 + p;
            if (b - a + 1 >= min_len) cand.push_back({a, b, p});
        }
    }
    std::sort(cand.begin(), cand.end(), [](const Stretch& x, const Stretch& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b > y.b;
        return x.p < y.p;
    });
    std::vector<Stretch> kept;
    int maxb = -1;
    for (const auto& c : cand) {
        if (c.b <= maxb) continue;
        kept.push_back(c);
        maxb = c.b;
    }
    return kept;
}

// Splits [u, v] (v - u >= n) into parts of length in [n, 2n+1]; returns interior cut points.
std::vector<int> fill_segment(int u, int v, int n) {
    const int D = v - u;
    const int parts = (D + 2 * n) / (2 * n + 1);  // ceil(D / (2n+1))
    std::vector<int> cuts;
    int pos = u;
    for (int i = 0; i + 1 < parts; ++i) {
        pos += D / parts + (i < D % parts ? 1 : 0);
        cuts.push_back(pos);
    }
    return cuts;
}

struct Req {
    int pos;
    int stretch;  // -1 for forced markers
    bool is_start;
};

struct Placement {
    std::vector<int> markers;
    std::vector<LongGap> flags;
};

std::optional<Placement> try_place(int W, int k, int n, bool wrap, const std::vector<Stretch>& st, std::size_t& drop) {
    const int longest = 2 * n + 2;
    std::vector<int> start(st.size(), -1), end(st.size(), -1);
    std::vector<char> has_start(st.size()), has_end(st.size());
    std::vector<Req> req;
    if (wrap) req.push_back({0, -1, false});
    for (std::size_t s = 0; s < st.size(); ++s) {
        has_start[s] = wrap || st[s].a > 0;
        has_end[s] = wrap || st[s].b < W - 1;
        start[s] = std::max(st[s].a - 1, 0);
        end[s] = st[s].b;
        if (has_start[s] && !(wrap && start[s] == 0)) req.push_back({start[s], static_cast<int>(s), true});
        if (has_end[s]) req.push_back({end[s], static_cast<int>(s), false});
    }
    if (wrap) req.push_back({W, -1, false});

    // Room a stretch endpoint has to move inward while its own gap stays long.
    auto inner = [&](std::size_t s) { return end[s] - (has_start[s] ? start[s] : st[s].a - 1); };
    for (std::size_t i = 0; i + 1 < req.size(); ++i) {
        Req& u = req[i];
        Req& v = req[i + 1];
        if (u.stretch >= 0 && u.is_start && v.stretch == u.stretch) continue;  // the flagged gap itself
        int deficit = n - (v.pos - u.pos);
        if (deficit <= 0) continue;
        auto us = static_cast<std::size_t>(u.stretch), vs = static_cast<std::size_t>(v.stretch);
        int slack_u = (u.stretch >= 0 && !u.is_start) ? std::max(0, inner(us) - longest) : 0;
        int slack_v = (v.stretch >= 0 && v.is_start) ? std::max(0, inner(vs) - longest) : 0;
        if (slack_u + slack_v < deficit) {
            // Give up the shorter of the two stretches and retry.
            if (u.stretch >= 0 && v.stretch >= 0)
                drop = (st[us].b - st[us].a <= st[vs].b - st[vs].a) ? us : vs;
            else
                drop = u.stretch >= 0 ? us : vs;
            return std::nullopt;
        }
        const int mu = std::min(deficit, slack_u);
        if (mu) {
            u.pos -= mu;
            end[us] -= mu;
        }
        if (deficit - mu) {
            v.pos += deficit - mu;
            start[vs] += deficit - mu;
        }
    }

    Placement out;
    for (const auto& r : req)
        if (r.pos < W) out.markers.push_back(r.pos);
    for (std::size_t i = 0; i + 1 < req.size(); ++i) {
        const Req& u = req[i];
        const Req& v = req[i + 1];
        if (u.stretch >= 0 && u.is_start && v.stretch == u.stretch) continue;
        if (wrap && i == 0 && u.stretch < 0 && v.stretch >= 0 && !v.is_start && start[static_cast<std::size_t>(v.stretch)] == 0)
            continue;  // stretch whose start marker is the forced column 0
        for (int c : fill_segment(u.pos, v.pos, n)) out.markers.push_back(c);
    }
    if (!wrap) {
        if (req.empty()) {
            if (st.empty())
                for (int c = 0; c < W; c += n) out.markers.push_back(c);
        } else {
            const Req& first = req.front();
            const bool left_open_stretch = first.stretch >= 0 && !first.is_start;
            if (!left_open_stretch)
                for (int c = first.pos - n; c >= 0; c -= n) out.markers.push_back(c);
            const Req& last = req.back();
            const bool right_open_stretch = last.stretch >= 0 && last.is_start;
            if (!right_open_stretch)
                for (int c = last.pos + n; c < W; c += n) out.markers.push_back(c);
        }
    }
    for (std::size_t s = 0; s < st.size(); ++s) {
        LongGap g;
        g.row = k;
        g.period = st[s].p;
        g.open_left = !has_start[s];
        g.open_right = !has_end[s];
        g.start = has_start[s] ? start[s] + 1 : 0;
        g.end = has_end[s] ? end[s] : W - 1;
        out.flags.push_back(g);
    }
    return out;
}

}  // namespace

ArrayWindow place_krieger(ArrayWindow w, int k, int n) {
    w.validate();
    check_row(w, k);
    if (n < 1) throw ArgumentError("Krieger parameter must be positive");
    const int W = w.width();
    if (W <= 2 * n + 1) throw ArgumentError("window width " + std::to_string(W) + " not wider than 2n+1 = " + std::to_string(2 * n + 1));
    const bool wrap = w.boundary == Boundary::periodic;

    std::erase_if(w.long_gaps, [k](const LongGap& g) { return g.row == k; });
    if (wrap) {
        for (int p = 1; p < n; ++p) {
            bool all = true;
            for (int t = 0; t < W && all; ++t) all = columns_equal(w, k, t, t + p);
            if (all) {
                w.long_gaps.push_back({k, 0, W - 1, p, true, true});
                return w;
            }
        }
    }
    auto st = long_stretches(w, k, n, 5 * n + 4);
    std::optional<Placement> placed;
    for (;;) {
        std::size_t drop = 0;
        placed = try_place(W, k, n, wrap, st, drop);
        if (placed) break;
        st.erase(st.begin() + static_cast<std::ptrdiff_t>(drop));
    }
    auto& row = w.row_markers(k);
    row.insert(placed->markers.begin(), placed->markers.end());
    w.long_gaps.insert(w.long_gaps.end(), placed->flags.begin(), placed->flags.end());
    return w;
}

namespace {

// Nearest marker at or to the right of column c (cyclic under wrap).
std::optional<int> nearest_right(const std::set<int>& ms, int c, bool wrap) {
    auto it = ms.lower_bound(c);
    if (it != ms.end()) return *it;
    if (wrap && !ms.empty()) return *ms.begin();
    return std::nullopt;
}

int cyclic_distance(int a, int b, int W, bool wrap) {
    int d = a > b ? a - b : b - a;
    return wrap ? std::min(d, W - d) : d;
}

// Distance from c to the closest marker of the set, or a large value.
int distance_to_set(const std::set<int>& ms, int c, int W, bool wrap) {
    if (ms.empty()) return 1 << 30;
    int best = 1 << 30;
    auto it = ms.lower_bound(c);
    if (it != ms.end()) best = std::min(best, cyclic_distance(*it, c, W, wrap));
    if (it != ms.begin()) best = std::min(best, cyclic_distance(*std::prev(it), c, W, wrap));
    if (wrap) {
        best = std::min(best, cyclic_distance(*ms.begin(), c, W, wrap));
        best = std::min(best, cyclic_distance(*ms.rbegin(), c, W, wrap));
    }
    return best;
}

std::set<int> adjust_row(ArrayWindow& w, int k, const std::set<int>& moving) {
    const bool wrap = w.boundary == Boundary::periodic;
    const auto& above = w.row_markers(k - 1);
    std::set<int> out;
    for (int m : moving) {
        if (auto t = nearest_right(above, m, wrap))
            out.insert(*t);
        else
            w.warnings.push_back("row " + std::to_string(k) + ": marker at " + std::to_string(m) +
                                 " has no row-" + std::to_string(k - 1) + " marker to its right; dropped at the boundary");
    }
    return out;
}

}  // namespace

ArrayWindow upward_adjust(ArrayWindow w) {
    w.validate();
    for (int k = 2; k <= w.depth(); ++k) w.row_markers(k) = adjust_row(w, k, w.row_markers(k));
    return w;
}

std::pair<int, int> decompose_gap(int p, int m) {
    if (p < 1 || m < 1) throw ArgumentError("decompose_gap needs positive arguments");
    const int b = p % m;
    if (static_cast<long long>(b) * (m + 1) > p)
        throw ArgumentError("gap " + std::to_string(p) + " is not a sum of blocks " + std::to_string(m) + " and " + std::to_string(m + 1));
    return {(p - b * (m + 1)) / m, b};
}

ArrayWindow subdivide_balance(ArrayWindow w, const MarkerSchedule& schedule) {
    w.validate();
    if (static_cast<int>(schedule.m.size()) < w.depth()) throw ArgumentError("schedule has fewer bases than window rows");
    const int W = w.width();
    for (int k = 1; k <= w.depth(); ++k) {
        const int m = schedule.m[static_cast<std::size_t>(k - 1)];
        if (m < 1) throw ArgumentError("subdivision base must be positive");
        std::set<int> fresh;
        for (const auto& g : interior_gaps(w, k)) {
            std::pair<int, int> ab;
            try {
                ab = decompose_gap(g.length(), m);
            } catch (const ArgumentError&) {
                throw ArgumentError("row " + std::to_string(k) + ": gap [" + std::to_string(g.left + 1) + ", " + std::to_string(g.right) +
                                    "] of length " + std::to_string(g.length()) + " cannot be split into blocks of " +
                                    std::to_string(m) + " and " + std::to_string(m + 1));
            }
            int pos = g.left;
            for (int i = 0; i < ab.first + ab.second - 1; ++i) {
                pos += i < ab.first ? m : m + 1;
                fresh.insert(pos % W);
            }
        }
        if (k >= 2) fresh = adjust_row(w, k, fresh);
        w.row_markers(k).insert(fresh.begin(), fresh.end());
    }
    return w;
}

ArrayWindow periodic_markers(ArrayWindow w, int k) {
    w.validate();
    check_row(w, k);
    const int W = w.width();
    const bool wrap = w.boundary == Boundary::periodic;
    for (const auto& g : interior_gaps(w, k)) {
        if (g.length() <= 2 * k + 1) continue;
        bool flagged = std::any_of(w.long_gaps.begin(), w.long_gaps.end(), [&](const LongGap& f) {
            return f.row == k && f.start == g.left + 1 && (f.end == g.right || f.end == g.right % W);
        });
        if (!flagged)
            throw InternalError("row " + std::to_string(k) + ": unflagged long gap [" + std::to_string(g.left + 1) + ", " +
                                std::to_string(g.right) + "]");
    }
    for (const auto& f : w.long_gaps) {
        if (f.row != k || f.length() <= 2 * k + 1) continue;
        const int p = f.period;
        if (p < 1 || p >= k) throw InternalError("flagged period out of range");
        auto& row = w.row_markers(p);
        // Keep the phase of markers already inside the rectangle, else start at its first column.
        int phase = f.start;
        if (auto it = row.lower_bound(f.start); it != row.end() && *it <= f.end) phase = *it;
        const std::set<int> before = row;
        int c = f.start + ((phase - f.start) % p + p) % p;
        for (; c <= f.end; c += p)
            if (distance_to_set(before, c % W, W, wrap) >= p) row.insert(c % W);
    }
    return w;
}

ArrayWindow upward_stretch(ArrayWindow w) {
    w.validate();
    const int W = w.width();
    const bool wrap = w.boundary == Boundary::periodic;
    const auto original = w.markers;
    for (int k = 2; k <= w.depth(); ++k)
        for (int c : original[static_cast<std::size_t>(k - 1)])
            for (int l = k - 1; l >= 1; --l) {
                if (distance_to_set(original[static_cast<std::size_t>(l - 1)], c, W, wrap) <= l) break;
                if (w.row_markers(l).insert(c).second) w.intrusions.emplace_back(l, c);
            }
    return w;
}

ArrayWindow leftward_stretch(ArrayWindow w) {
    w.validate();
    const int W = w.width();
    const bool wrap = w.boundary == Boundary::periodic;
    for (int k = 1; k <= w.depth(); ++k) {
        const std::set<int> original = w.row_markers(k);
        for (int i : original)
            for (int c = i - k;; c -= k) {
                if (!wrap && c < 0) break;
                if (wrap && c <= i - W) break;
                const int cc = ((c % W) + W) % W;
                if (distance_to_set(original, cc, W, wrap) < k) break;
                w.row_markers(k).insert(cc);
            }
    }
    return w;
}

ArrayWindow aperiodic_pipeline(ArrayWindow w) {
    for (int k = 2; k <= w.depth(); ++k) w = place_krieger(std::move(w), k, k);
    for (int k = 2; k <= w.depth(); ++k) w = periodic_markers(std::move(w), k);
    return leftward_stretch(upward_stretch(std::move(w)));
}

}  // namespace symext
