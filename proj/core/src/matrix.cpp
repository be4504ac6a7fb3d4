#include "slopestab/matrix.hpp"

namespace slopestab {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Rat det(const QMatrix& m) {
    if (!m.is_square()) throw Error("det: matrix not square");
    const std::size_t n = m.rows();
    QMatrix a = m;
    Rat result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            result = -result;
        }
        result *= a.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col) == 0) continue;
            Rat f = a.at(i, col) / a.at(col, col);
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return result;
}

std::vector<Rat> leading_principal_minors(const QMatrix& m) {
    if (!m.is_square()) throw Error("leading_principal_minors: matrix not square");
    std::vector<Rat> minors;
    minors.reserve(m.rows());
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        QMatrix block(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) block.at(i, j) = m.at(i, j);
        minors.push_back(det(block));
    }
    return minors;
}

std::vector<Rat> solve(const QMatrix& m, const std::vector<Rat>& rhs) {
    if (!m.is_square()) throw Error("solve: matrix not square");
    const std::size_t n = m.rows();
    if (rhs.size() != n) throw Error("solve: rhs size mismatch");
    QMatrix a = m;
    std::vector<Rat> b = rhs;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw Error("solve: singular matrix");
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col) == 0) continue;
            Rat f = a.at(i, col) / a.at(col, col);
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
            b[i] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rat acc = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) acc -= a.at(ii, j) * x[j];
        x[ii] = acc / a.at(ii, ii);
    }
    return x;
}

QMatrix inverse(const QMatrix& m) {
    if (!m.is_square()) throw Error("inverse: matrix not square");
    const std::size_t n = m.rows();
    QMatrix inv(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<Rat> e(n);
        e[col] = 1;
        std::vector<Rat> x = solve(m, e);
        for (std::size_t i = 0; i < n; ++i) inv.at(i, col) = x[i];
    }
    return inv;
}

Inertia inertia(const QMatrix& m) {
    if (!m.is_symmetric()) throw Error("inertia: matrix not symmetric");
    const std::size_t n = m.rows();
    QMatrix a = m;
    Inertia result;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // Pick a live index with nonzero diagonal entry; if all live
        // diagonals vanish, a congruence row+column addition manufactures
        // one from any nonzero off-diagonal pair (2x the pairing).
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a.at(i, i) != 0) { p = i; break; }
        if (p == n) {
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[j] && a.at(i, j) != 0) { bi = i; bj = j; break; }
            }
            if (bi == n) break;  // remaining block is zero
            for (std::size_t k = 0; k < n; ++k) a.at(bi, k) += a.at(bj, k);
            for (std::size_t k = 0; k < n; ++k) a.at(k, bi) += a.at(k, bj);
            p = bi;
        }
        const Rat d = a.at(p, p);
        if (sign(d) > 0) ++result.positive; else ++result.negative;
        done[p] = true;
        // Clear row/column p against the remaining live indices.
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a.at(i, p) == 0) continue;
            Rat f = a.at(i, p) / d;
            for (std::size_t k = 0; k < n; ++k) a.at(i, k) -= f * a.at(p, k);
            for (std::size_t k = 0; k < n; ++k) a.at(k, i) -= f * a.at(k, p);
        }
    }
    result.zero = n - result.positive - result.negative;
    return result;
}

}  // namespace slopestab
