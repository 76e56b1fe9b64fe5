/*
   Copyright 2026 The planeaut Authors

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

#include "planeaut/linalg.hpp"

#include <stdexcept>

namespace planeaut {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(Matrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        Scalar inv = a[r][c].inverse();
        for (std::size_t j = c; j < a[r].size(); ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (std::size_t j = c; j < a[i].size(); ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix a) {
    if (a.empty()) return 0;
    return echelon(a, a[0].size()).size();
}

std::optional<Vector> solve(Matrix a, Vector b) {
    if (a.size() != b.size()) throw std::logic_error("solve: dimension mismatch");
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    auto pivots = echelon(a, cols);
    for (std::size_t i = pivots.size(); i < a.size(); ++i)
        if (!a[i][cols].is_zero()) return std::nullopt;
    Vector x(cols, Scalar(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

std::optional<Vector> DependencyFinder::add(Vector v) {
    Vector comb(count_ + 1, Scalar(0));
    comb[count_] = Scalar(1);
    for (const auto& row : rows_) {
        if (row.pivot >= v.size() || v[row.pivot].is_zero()) continue;
        Scalar f = v[row.pivot] / row.reduced[row.pivot];
        for (std::size_t j = 0; j < v.size() && j < row.reduced.size(); ++j)
            if (!row.reduced[j].is_zero()) v[j] -= f * row.reduced[j];
        for (std::size_t j = 0; j < row.combination.size(); ++j) comb[j] -= f * row.combination[j];
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
    if (pivot == v.size()) return comb;
    rows_.push_back({std::move(v), pivot, std::move(comb)});
    ++count_;
    return std::nullopt;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix c(n, Vector(m, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

Matrix identity_matrix(std::size_t n) {
    Matrix m(n, Vector(n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

UniPoly minimal_polynomial(const Matrix& m) {
    std::size_t n = m.size();
    DependencyFinder dep;
    Matrix power = identity_matrix(n);
    for (;;) {
        Vector flat;
        flat.reserve(n * n);
        for (const auto& row : power) flat.insert(flat.end(), row.begin(), row.end());
        if (auto c = dep.add(std::move(flat))) return UniPoly(std::move(*c));
        power = multiply(power, m);
    }
}

}  // namespace planeaut
