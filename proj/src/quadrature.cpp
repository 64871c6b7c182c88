#include "pintswe/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace pintswe {

Matrix matmul(const Matrix& x, const Matrix& y) {
    assert(x.cols == y.rows);
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const double xv = x(i, k);
            for (int j = 0; j < y.cols; ++j) z(i, j) += xv * y(k, j);
        }
    return z;
}

double lagrange_basis(const std::vector<double>& nodes, int j, double x) {
    double acc = 1.0;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        if (i == j) continue;
        acc *= (x - nodes[i]) / (nodes[j] - nodes[i]);
    }
    return acc;
}

namespace {

// Monomial coefficients of the Lagrange basis polynomial L_j on the nodes.
std::vector<double> lagrange_monomial(const std::vector<double>& nodes, int j) {
    std::vector<double> c{1.0};
    double denom = 1.0;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        if (i == j) continue;
        denom *= nodes[j] - nodes[i];
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] -= nodes[i] * c[k];
            next[k + 1] += c[k];
        }
        c = std::move(next);
    }
    for (double& v : c) v /= denom;
    return c;
}

double integrate_monomial(const std::vector<double>& c, double upper) {
    double acc = 0.0, xp = upper;
    for (std::size_t k = 0; k < c.size(); ++k) {
        acc += c[k] * xp / static_cast<double>(k + 1);
        xp *= upper;
    }
    return acc;
}

std::vector<double> lobatto_nodes(int num_nodes) {
    switch (num_nodes) {
        case 2:
            return {0.0, 1.0};
        case 3:
            return {0.0, 0.5, 1.0};
        case 5: {
            const double c = std::sqrt(3.0 / 7.0);
            return {0.0, 0.5 * (1.0 - c), 0.5, 0.5 * (1.0 + c), 1.0};
        }
        default:
            throw std::invalid_argument("build_tables: supported node counts are 2, 3, 5");
    }
}

}  // namespace

QuadratureTables build_tables(int num_nodes) {
    QuadratureTables t;
    t.num_nodes = num_nodes;
    t.nodes = lobatto_nodes(num_nodes);
    const int n = num_nodes;

    t.q = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        const auto c = lagrange_monomial(t.nodes, j);
        for (int m = 0; m < n; ++m) t.q(m, j) = integrate_monomial(c, t.nodes[m]);
    }

    t.q_exp = Matrix(n, n);
    for (int m = 1; m < n; ++m)
        for (int j = 0; j < m; ++j) t.q_exp(m, j) = t.nodes[j + 1] - t.nodes[j];

    // LU rule: U^T of the unpivoted factorization of (Q interior)^T, embedded
    // with a zero first row and column.
    const int mm = n - 1;
    Matrix qt(mm, mm);
    for (int i = 0; i < mm; ++i)
        for (int j = 0; j < mm; ++j) qt(i, j) = t.q(1 + j, 1 + i);  // transpose of Q[1:,1:]
    for (int k = 0; k < mm; ++k) {
        for (int i = k + 1; i < mm; ++i) {
            const double l = qt(i, k) / qt(k, k);
            for (int j = k; j < mm; ++j) qt(i, j) -= l * qt(k, j);
        }
    }
    t.q_imp = Matrix(n, n);
    for (int i = 0; i < mm; ++i)
        for (int j = 0; j <= i; ++j) t.q_imp(1 + i, 1 + j) = qt(j, i);  // U^T
    return t;
}

}  // namespace pintswe
