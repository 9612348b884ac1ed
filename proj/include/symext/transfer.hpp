#pragma once

#include "symext/entropy_value.hpp"
#include "symext/symbolic.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <utility>
#include <vector>

namespace symext {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Adjacency matrix of the language graph.
template <typename Scalar = double>
MatrixX<Scalar> transfer_matrix(const LanguageGraph& g) {
    const auto n = static_cast<Eigen::Index>(g.states.size());
    MatrixX<Scalar> a = MatrixX<Scalar>::Zero(n, n);
    for (Eigen::Index u = 0; u < n; ++u)
        for (int v : g.succ[static_cast<std::size_t>(u)]) a(u, v) += Scalar(1);
    return a;
}

// Collatz-Wielandt bounds min_i (Av)_i/v_i <= rho(A) <= max_i (Av)_i/v_i for positive v.
template <typename DerivedA, typename DerivedV>
std::pair<typename DerivedA::Scalar, typename DerivedA::Scalar> collatz_wielandt(const Eigen::MatrixBase<DerivedA>& a,
                                                                                  const Eigen::MatrixBase<DerivedV>& v) {
    using Scalar = typename DerivedA::Scalar;
    const VectorX<Scalar> av = a * v;
    const VectorX<Scalar> ratio = av.cwiseQuotient(v);
    return {ratio.minCoeff(), ratio.maxCoeff()};
}

struct RadiusBounds {
    double lo = 0;
    double hi = 0;
    int iterations = 0;
    bool exact = false;  // constant row sums: rho is that sum
};

// Spectral radius bounds of an irreducible nonnegative matrix by power iteration on I + A
// (primitive even when A is periodic).
template <typename Derived>
RadiusBounds spectral_radius_bounds(const Eigen::MatrixBase<Derived>& a, double tol, int max_iterations) {
    using Scalar = typename Derived::Scalar;
    const auto n = a.rows();
    RadiusBounds out;
    const VectorX<Scalar> rows = a.rowwise().sum();
    if (rows.maxCoeff() == rows.minCoeff()) {
        out.lo = out.hi = static_cast<double>(rows(0));
        out.exact = true;
        return out;
    }
    const MatrixX<Scalar> b = a + MatrixX<Scalar>::Identity(n, n);
    VectorX<Scalar> v = VectorX<Scalar>::Ones(n);
    for (int it = 1; it <= max_iterations; ++it) {
        v = b * v;
        v /= v.maxCoeff();
        auto [lo, hi] = collatz_wielandt(b, v);
        out.lo = static_cast<double>(lo) - 1;
        out.hi = static_cast<double>(hi) - 1;
        out.iterations = it;
        if (out.lo >= 1 && std::log2(out.hi) - std::log2(out.lo) <= tol) break;
        if (out.lo < 1 && out.hi - out.lo <= tol) break;
    }
    return out;
}

struct TopEntropy {
    Bracket bits;
    int iterations = 0;
    bool converged = true;
};

inline constexpr double kDefaultEntropyTolerance = 0.01;

TopEntropy top_entropy(const SftSpec& sft, double tol = kDefaultEntropyTolerance, int max_iterations = 20000);

// Strongly connected components of the language graph (Tarjan), each as a list of states.
std::vector<std::vector<int>> strongly_connected_components(const LanguageGraph& g);

}  // namespace symext
