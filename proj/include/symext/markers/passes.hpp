#pragma once

#include "symext/markers/window.hpp"

#include <utility>
#include <vector>

namespace symext {

struct MarkerSchedule {
    std::vector<int> n;  // Krieger parameters per row
    std::vector<int> m;  // subdivision bases per row

    // n_{k+1} >= 3(2 n_k + 1); throws ArgumentError naming the first failing row.
    void check_growth() const;
};

// Row-k gap bounds after Krieger placement with n and upward adjustment, by propagating the
// maximal displacement (strictly less than the largest row-(k-1) gap).
std::vector<std::pair<int, int>> adjusted_gap_bounds(const std::vector<int>& n);
// [m_k - (m_1+...+m_{k-1}+k-1), m_k + 1 + (m_1+...+m_{k-1}+k-1)] per row.
std::vector<std::pair<int, int>> subdivision_bounds(const std::vector<int>& m);

// Greedy placement in row k with gaps in [n, 2n+1]; long periodic stretches (period < n) in
// the top k rows are left as single flagged gaps.
ArrayWindow place_krieger(ArrayWindow w, int k, int n);

// Moves every row-k marker (k >= 2) right onto the nearest row-(k-1) marker.
ArrayWindow upward_adjust(ArrayWindow w);

// a*m + b*(m+1) = p with a maximal.
std::pair<int, int> decompose_gap(int p, int m);

ArrayWindow subdivide_balance(ArrayWindow w, const MarkerSchedule& schedule);

ArrayWindow periodic_markers(ArrayWindow w, int k);
ArrayWindow upward_stretch(ArrayWindow w);
ArrayWindow leftward_stretch(ArrayWindow w);

// Krieger placement with n = k in rows 2..K, periodic markers, upward then leftward stretching.
ArrayWindow aperiodic_pipeline(ArrayWindow w);

}  // namespace symext
