#pragma once

#include <vector>

namespace pintswe {

/// Gauss-Legendre nodes mu_i = sin(phi_i) and quadrature weights on [-1, 1].
/// Nodes are the roots of the Legendre polynomial P_n, sorted ascending
/// (south to north); weights are positive and sum to 2.
struct GaussLatitudes {
    std::vector<double> mu;
    std::vector<double> weight;

    int size() const { return static_cast<int>(mu.size()); }
};

/// Computes the n-point Gauss-Legendre rule by Newton iteration on P_n,
/// converged to 1e-15 on the node values.
GaussLatitudes gauss_latitudes(int n);

}  // namespace pintswe
