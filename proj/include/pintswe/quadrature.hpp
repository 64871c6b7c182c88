#pragma once

#include <cassert>
#include <vector>

namespace pintswe {

/// Small dense row-major matrix for the quadrature and transfer tables.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

Matrix matmul(const Matrix& x, const Matrix& y);

/// Collocation tables for one level: M+1 Gauss-Lobatto nodes on [0, 1], the
/// cumulative-integration matrix Q with Q_{mj} = int_0^{tau_m} L_j, the
/// forward-Euler matrix, and the implicit matrix from the LU rule (transpose
/// of the U factor of the unpivoted LU factorization of the transposed
/// interior submatrix of Q).
struct QuadratureTables {
    int num_nodes = 0;           // M + 1
    std::vector<double> nodes;   // tau_0 = 0 < ... < tau_M = 1
    Matrix q;                    // (M+1) x (M+1), first row zero
    Matrix q_exp;                // strictly lower triangular
    Matrix q_imp;                // lower triangular, zero first row/column
};

/// Supported node counts: 2, 3, 5.
QuadratureTables build_tables(int num_nodes);

/// Lagrange basis value L_j(x) on the given nodes, computed factorwise so
/// that evaluation at a node is exact.
double lagrange_basis(const std::vector<double>& nodes, int j, double x);

}  // namespace pintswe
