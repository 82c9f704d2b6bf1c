/*
   Copyright 2026 The regula authors

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

#include "regula/rat_mat.hpp"

namespace regula {

RatMat::RatMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMat: negative dimension");
    e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), RatFunc::zero());
}

RatMat::RatMat(const std::vector<std::vector<RatFunc>>& rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    e_.reserve(static_cast<size_t>(rows_) * static_cast<size_t>(cols_));
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("RatMat: ragged rows");
        for (const auto& v : r) e_.push_back(v);
    }
}

size_t RatMat::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("RatMat: index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc::one();
    return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMat: dimension mismatch in +");
    RatMat r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMat: dimension mismatch in -");
    RatMat r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("RatMat: dimension mismatch in *");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            RatFunc acc;
            for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

RatMat RatMat::operator-() const {
    RatMat r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

bool RatMat::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

RatMat RatMat::transpose() const {
    RatMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RatFunc RatMat::det() const {
    if (!is_square()) throw std::invalid_argument("RatMat::det: non-square matrix");
    const int n = rows_;
    if (n == 0) return RatFunc::one();
    RatMat w(*this);
    RatFunc d = RatFunc::one();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!w.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return RatFunc::zero();
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(w.at(pivot, j), w.at(col, j));
            d = -d;
        }
        const RatFunc& pv = w.at(col, col);
        d = d * pv;
        for (int i = col + 1; i < n; ++i) {
            if (w.at(i, col).is_zero()) continue;
            const RatFunc factor = w.at(i, col) / pv;
            for (int j = col; j < n; ++j)
                w.at(i, j) = w.at(i, j) - factor * w.at(col, j);
        }
    }
    return d;
}

RatMat RatMat::inverse() const {
    if (!is_square()) throw std::invalid_argument("RatMat::inverse: non-square matrix");
    const int n = rows_;
    RatMat w(*this);
    RatMat inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!w.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw singular_matrix_error("RatMat::inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const RatFunc pv = w.at(col, col);
        for (int j = 0; j < n; ++j) {
            w.at(col, j) = w.at(col, j) / pv;
            inv.at(col, j) = inv.at(col, j) / pv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            const RatFunc factor = w.at(i, col);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = w.at(i, j) - factor * w.at(col, j);
                inv.at(i, j) = inv.at(i, j) - factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

RatMat RatMat::hconcat(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("RatMat::hconcat: row mismatch");
    RatMat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

RatMat RatMat::vconcat(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("RatMat::vconcat: column mismatch");
    RatMat r(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

RatMat scalar_mul(const RatFunc& f, const RatMat& a) {
    RatMat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = f * a.at(i, j);
    return r;
}

MatStability mat_is_stable(const RatMat& a) {
    MatStability s;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            StabilityVerdict v = in_S(a.at(i, j));
            if (!v.stable) {
                s.stable = false;
                s.failures.push_back({i, j, std::move(v)});
            }
        }
    return s;
}

} // namespace regula
