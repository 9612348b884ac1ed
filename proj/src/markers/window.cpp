#include "symext/markers/window.hpp"

#include "symext/errors.hpp"

#include <algorithm>

namespace symext {

ArrayWindow ArrayWindow::from_strings(const std::vector<std::string>& rows, std::vector<std::string> alphabets, Boundary b) {
    if (rows.empty()) throw ArgumentError("window needs at least one row");
    if (!alphabets.empty() && alphabets.size() != rows.size()) throw ArgumentError("one alphabet per row expected");
    ArrayWindow w;
    w.boundary = b;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string chars = alphabets.empty() ? rows[r] : alphabets[r];
        std::sort(chars.begin(), chars.end());
        if (alphabets.empty()) chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
        if (chars.empty()) chars = "0";
        std::vector<std::string> names;
        for (char c : chars) names.emplace_back(1, c);
        Alphabet a(std::move(names));
        w.rows.push_back(a.parse(rows[r]));
        w.alphabets.push_back(std::move(a));
    }
    w.markers.resize(rows.size());
    w.validate();
    return w;
}

void ArrayWindow::validate() const {
    if (rows.empty()) throw ArgumentError("window needs at least one row");
    if (alphabets.size() != rows.size()) throw ArgumentError("one alphabet per row expected");
    if (markers.size() != rows.size()) throw ArgumentError("one marker set per row expected");
    const auto W = rows.front().size();
    if (W == 0) throw ArgumentError("window has zero width");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != W) throw ArgumentError("row " + std::to_string(r + 1) + " has a different width");
        for (Symbol s : rows[r])
            if (s < 0 || s >= alphabets[r].size()) throw ArgumentError("row " + std::to_string(r + 1) + " has an out-of-alphabet symbol");
        for (int m : markers[r])
            if (m < 0 || m >= static_cast<int>(W))
                throw ArgumentError("marker " + std::to_string(m) + " outside the window in row " + std::to_string(r + 1));
    }
}

std::vector<std::string> ArrayWindow::render() const {
    std::vector<std::string> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string s;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (markers[r].count(static_cast<int>(c))) s += '|';
            s += alphabets[r].name(rows[r][c]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Gap> interior_gaps(const ArrayWindow& w, int row) {
    const auto& ms = w.row_markers(row);
    std::vector<Gap> gaps;
    if (ms.empty()) return gaps;
    int prev = -1;
    for (int m : ms) {
        if (prev >= 0) gaps.push_back({row, prev, m});
        prev = m;
    }
    if (w.boundary == Boundary::periodic) gaps.push_back({row, *ms.rbegin(), *ms.begin() + w.width()});
    return gaps;
}

bool columns_equal(const ArrayWindow& w, int k, int t, int u) {
    const int W = w.width();
    t = ((t % W) + W) % W;
    u = ((u % W) + W) % W;
    for (int r = 1; r <= k; ++r)
        if (w.at(r, t) != w.at(r, u)) return false;
    return true;
}

bool matches_periodic(const ArrayWindow& w, int k, int start, int end, int p) {
    for (int t = start; t + p <= end; ++t)
        if (!columns_equal(w, k, t, t + p)) return false;
    return true;
}

int periodic_pattern(const ArrayWindow& w, int k, int start, int end, int limit) {
    for (int p = 1; p < limit; ++p)
        if (matches_periodic(w, k, start, end, p)) return p;
    return 0;
}

}  // namespace symext
