#include "symext/extension/prefix.hpp"

#include "symext/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>

namespace symext {

using boost::multiprecision::cpp_int;

bool is_prefix_of(const Word& a, const Word& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

PrefixAllocation prefix_allocate(int s, int n, const std::vector<int>& exponents) {
    if (s < 1) throw ArgumentError("alphabet size must be positive");
    if (n < 0) throw ArgumentError("total length must be nonnegative");
    cpp_int total = 0;
    for (int e : exponents) {
        if (e < 0 || e > n) throw ArgumentError("exponent " + std::to_string(e) + " outside [0, " + std::to_string(n) + "]");
        total += boost::multiprecision::pow(cpp_int(s), static_cast<unsigned>(e));
    }
    const cpp_int space = boost::multiprecision::pow(cpp_int(s), static_cast<unsigned>(n));
    if (total > space) throw ArgumentError("Kraft inequality violated: deficit " + cpp_int(total - space).str());

    std::vector<std::size_t> order(exponents.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return exponents[a] > exponents[b]; });

    PrefixAllocation out{s, n, std::vector<PrefixEntry>(exponents.size())};
    cpp_int pos = 0;
    for (std::size_t i : order) {
        const int e = exponents[i];
        const cpp_int block = boost::multiprecision::pow(cpp_int(s), static_cast<unsigned>(e));
        // pos is a sum of blocks at least as large, hence a multiple of this one.
        cpp_int q = pos / block;
        Word prefix(static_cast<std::size_t>(n - e));
        for (std::size_t d = prefix.size(); d-- > 0;) {
            prefix[d] = static_cast<Symbol>(q % s);
            q /= s;
        }
        out.entries[i] = {std::move(prefix), e};
        pos += block;
    }
    return out;
}

}  // namespace symext
