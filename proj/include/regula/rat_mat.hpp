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

#ifndef REGULA_RAT_MAT_HPP
#define REGULA_RAT_MAT_HPP

#include "regula/stable_ring.hpp"

#include <vector>

namespace regula {

/// Inversion of a matrix with zero determinant.
class singular_matrix_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Dense matrix over the field of rational functions. Entries stay in
 * canonical form through every operation, so equality is structural.
 */
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols);
    /// Row-major construction; inner vectors must have equal lengths.
    explicit RatMat(const std::vector<std::vector<RatFunc>>& rows);

    static RatMat identity(int n);
    static RatMat zeros(int rows, int cols) { return RatMat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const RatFunc& at(int i, int j) const { return e_[index(i, j)]; }
    RatFunc& at(int i, int j) { return e_[index(i, j)]; }

    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat operator*(const RatMat& o) const;
    RatMat operator-() const;
    bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const RatMat& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    RatMat transpose() const;

    /// Exact determinant via Gaussian elimination over the fraction field.
    RatFunc det() const;

    /// Exact inverse; throws singular_matrix_error when det = 0.
    RatMat inverse() const;

    /// [A B] side by side.
    static RatMat hconcat(const RatMat& a, const RatMat& b);
    /// [A; B] stacked.
    static RatMat vconcat(const RatMat& a, const RatMat& b);

private:
    size_t index(int i, int j) const;
    int rows_, cols_;
    std::vector<RatFunc> e_;
};

/// Entrywise product f * A.
RatMat scalar_mul(const RatFunc& f, const RatMat& a);

struct MatEntryVerdict {
    int row, col; // zero-based
    StabilityVerdict verdict;
};

struct MatStability {
    bool stable = true;
    std::vector<MatEntryVerdict> failures;
};

/// Entrywise membership in S, with the failing entries and their verdicts.
MatStability mat_is_stable(const RatMat& a);

} // namespace regula

#endif // REGULA_RAT_MAT_HPP
