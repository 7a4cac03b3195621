#pragma once

#include <vector>

#include "satake/errors.hpp"
#include "satake/matrix.hpp"
#include "satake/numeric.hpp"

namespace satake {

/// Dense rectangular matrix over Q for elimination work. Rows of length
/// `cols`; kept separate from the square ring Matrix on purpose.
struct QMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Rat>> data;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r), std::vector<Rat>(static_cast<size_t>(c), Rat(0))) {}

    Rat& at(int r, int c) { return data[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
    const Rat& at(int r, int c) const { return data[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
};

inline QMat to_qmat(const RationalMatrix& m) {
    QMat q(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) q.at(i, j) = m.at(i, j);
    return q;
}

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m.data[static_cast<size_t>(pivot)], m.data[static_cast<size_t>(row)]);
        Rat inv = 1 / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(QMat m) { return static_cast<int>(rref(m).size()); }

inline int rank(const RationalMatrix& m) { return rank(to_qmat(m)); }

/// Basis of the right kernel {x : M x = 0} as column vectors.
inline std::vector<std::vector<Rat>> kernel_basis(QMat m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rat> v(static_cast<size_t>(m.cols), Rat(0));
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact basis of ker(x^k).
inline std::vector<std::vector<Rat>> kernel_power(const RationalMatrix& x, int k) {
    if (k <= 0) throw precondition_error("kernel_power requires k >= 1");
    return kernel_basis(to_qmat(x.power(k)));
}

inline int kernel_power_dim(const RationalMatrix& x, int k) {
    return x.dim() - rank(x.power(k));
}

/// Basis of the commutant {y : xy = yx}, solved as an exact linear system
/// in the s^2 entries of y.
inline std::vector<RationalMatrix> centralizer_basis(const RationalMatrix& x) {
    int s = x.dim();
    QMat sys(s * s, s * s);
    // Row (i,j): sum_k x[i][k] y[k][j] - y[i][k] x[k][j] = 0.
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            int row = i * s + j;
            for (int k = 0; k < s; ++k) {
                sys.at(row, k * s + j) += x.at(i, k);
                sys.at(row, i * s + k) -= x.at(k, j);
            }
        }
    }
    std::vector<RationalMatrix> basis;
    for (auto& v : kernel_basis(std::move(sys))) {
        RationalMatrix m(s, Rat(0));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) m.at(i, j) = v[static_cast<size_t>(i * s + j)];
        basis.push_back(std::move(m));
    }
    return basis;
}

inline int centralizer_dimension(const RationalMatrix& x) {
    int s = x.dim();
    QMat sys(s * s, s * s);
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            int row = i * s + j;
            for (int k = 0; k < s; ++k) {
                sys.at(row, k * s + j) += x.at(i, k);
                sys.at(row, i * s + k) -= x.at(k, j);
            }
        }
    }
    return s * s - rank(std::move(sys));
}

} // namespace satake
