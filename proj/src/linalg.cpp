/*
   Copyright 2026 The ictn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ictn/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ictn {

RatMatrix RatMatrix::identity(std::size_t size) {
    RatMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("RatMatrix: size mismatch");
    const std::size_t n = a.size();
    RatMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rat& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(size_);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix invert_rat_matrix(const RatMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a.at(pivot, col)) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("invert_rat_matrix: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Rat d = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(a.at(i, col)) == 0) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

CycMatrix CycMatrix::identity(std::size_t size, long order) {
    CycMatrix m(size, order);
    for (std::size_t i = 0; i < size; ++i) m.at(i, i) = CycElem::from_rational(order, Rat(1));
    return m;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.size() != b.size() || a.order() != b.order())
        throw std::invalid_argument("CycMatrix: shape or order mismatch");
    const std::size_t n = a.size();
    CycMatrix r(n, a.order());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    return r;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix t(size_, order_);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool CycMatrix::is_identity() const {
    const CycElem one = CycElem::from_rational(order_, Rat(1));
    const CycElem zero(order_);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j)
            if (at(i, j) != (i == j ? one : zero)) return false;
    return true;
}

CycMatrix invert_cyc_matrix(const CycMatrix& m) {
    const std::size_t n = m.size();
    const long order = m.order();
    CycMatrix a = m;
    CycMatrix inv = CycMatrix::identity(n, order);

    auto reduce_row = [&](CycMatrix& mat, std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) mat.at(i, j) = canonicalize(mat.at(i, j));
    };

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && canonicalize(a.at(pivot, col)).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("invert_cyc_matrix: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        CycElem dinv = field_inv(a.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) * dinv;
            inv.at(col, j) = inv.at(col, j) * dinv;
        }
        reduce_row(a, col);
        reduce_row(inv, col);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            CycElem f = canonicalize(a.at(i, col));
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = canonicalize(a.at(i, j) - f * a.at(col, j));
                inv.at(i, j) = canonicalize(inv.at(i, j) - f * inv.at(col, j));
            }
        }
    }
    return inv;
}

std::optional<std::vector<Rat>> solve_rat_system(std::size_t rows, std::size_t cols,
                                                 std::vector<Rat> a, std::vector<Rat> b) {
    if (a.size() != rows * cols || b.size() != rows)
        throw std::invalid_argument("solve_rat_system: shape mismatch");
    auto at = [&](std::size_t i, std::size_t j) -> Rat& { return a[i * cols + j]; };

    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(cols);
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t p = row;
        while (p < rows && sgn(at(p, col)) == 0) ++p;
        if (p == rows) throw std::invalid_argument("solve_rat_system: rank-deficient columns");
        if (p != row) {
            for (std::size_t j = col; j < cols; ++j) std::swap(at(p, j), at(row, j));
            std::swap(b[p], b[row]);
        }
        Rat d = at(row, col);
        for (std::size_t j = col; j < cols; ++j) at(row, j) /= d;
        b[row] /= d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || sgn(at(i, col)) == 0) continue;
            Rat f = at(i, col);
            for (std::size_t j = col; j < cols; ++j) at(i, j) -= f * at(row, j);
            b[i] -= f * b[row];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (sgn(b[i]) != 0) return std::nullopt;

    std::vector<Rat> x(cols);
    for (std::size_t col = 0; col < cols; ++col) x[col] = std::move(b[pivot_row[col]]);
    return x;
}

}  // namespace ictn
