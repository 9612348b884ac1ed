#pragma once

#include "symext/symbolic.hpp"

#include <set>
#include <string>
#include <vector>

namespace symext {

enum class Boundary { open, periodic };

// A row-k gap flagged as long: columns [start, end] match a `period`-periodic pattern in the
// top k rows. `open_left` / `open_right` mark sides that run into the window edge.
struct LongGap {
    int row = 0;
    int start = 0;
    int end = 0;
    int period = 0;
    bool open_left = false;
    bool open_right = false;

    int length() const { return end - start + 1; }
    friend bool operator==(const LongGap&, const LongGap&) = default;
};

// Rows are numbered 1..K throughout the marker API.
struct ArrayWindow {
    std::vector<Word> rows;
    std::vector<Alphabet> alphabets;
    std::vector<std::set<int>> markers;
    Boundary boundary = Boundary::open;
    std::vector<LongGap> long_gaps;
    std::vector<std::pair<int, int>> intrusions;  // (row, column) copies made by upward_stretch
    std::vector<std::string> warnings;

    // Rows given as strings over single-character symbols; alphabets default to the sorted
    // characters of each row.
    static ArrayWindow from_strings(const std::vector<std::string>& rows, std::vector<std::string> alphabets = {},
                                    Boundary b = Boundary::open);

    int width() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
    int depth() const { return static_cast<int>(rows.size()); }
    const std::set<int>& row_markers(int k) const { return markers.at(static_cast<std::size_t>(k - 1)); }
    std::set<int>& row_markers(int k) { return markers.at(static_cast<std::size_t>(k - 1)); }
    Symbol at(int k, int col) const { return rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(col)]; }

    // Throws ArgumentError on ragged rows or out-of-range markers.
    void validate() const;
    // Row strings with '|' in front of every marked column.
    std::vector<std::string> render() const;

    friend bool operator==(const ArrayWindow&, const ArrayWindow&) = default;
};

// Gap [left+1, right] between consecutive row markers; under wrap `right` may exceed width.
struct Gap {
    int row = 0;
    int left = 0;
    int right = 0;
    int length() const { return right - left; }
};

// Interior gaps of a row (boundary-truncated gaps excluded; cyclic under wrap).
std::vector<Gap> interior_gaps(const ArrayWindow& w, int row);

// Top-k columns t and t+p agree (indices taken mod width under wrap).
bool columns_equal(const ArrayWindow& w, int k, int t, int u);
// Columns [start, end] of the top k rows form a p-periodic block.
bool matches_periodic(const ArrayWindow& w, int k, int start, int end, int p);

// Smallest p < limit such that [start, end] is p-periodic in the top k rows, or 0.
int periodic_pattern(const ArrayWindow& w, int k, int start, int end, int limit);

}  // namespace symext
