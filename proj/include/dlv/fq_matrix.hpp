/*
   Copyright 2026 the dlv authors

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

#ifndef DLV_FQ_MATRIX_HPP
#define DLV_FQ_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "dlv/fq.hpp"
#include "dlv/kernels.hpp"

namespace dlv {

using FqVec = std::vector<FqField::Elem>;

// Dense row-major matrix over an FqField. Row operations go through the
// mod-ell kernels on prime fields and fall back to field ops otherwise.
class FqMatrix {
   public:
    FqMatrix() : F_(nullptr), rows_(0), cols_(0) {}
    FqMatrix(const FqField& F, size_t rows, size_t cols)
        : F_(&F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FqMatrix identity(const FqField& F, size_t n);
    static FqMatrix from_rows(const FqField& F, const std::vector<FqVec>& rows);
    static FqMatrix from_cols(const FqField& F, const std::vector<FqVec>& cols);

    const FqField& field() const { return *F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FqField::Elem operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    FqField::Elem& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const FqField::Elem* row_ptr(size_t r) const { return a_.data() + r * cols_; }
    FqField::Elem* row_ptr(size_t r) { return a_.data() + r * cols_; }
    FqVec row(size_t r) const { return FqVec(row_ptr(r), row_ptr(r) + cols_); }
    FqVec col(size_t c) const;

    bool operator==(const FqMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    FqMatrix operator+(const FqMatrix& o) const;
    FqMatrix operator-(const FqMatrix& o) const;
    FqMatrix operator*(const FqMatrix& o) const;
    FqMatrix scaled(FqField::Elem c) const;
    FqMatrix transposed() const;
    FqVec apply(const FqVec& v) const;  // matrix * column vector

    bool is_zero() const;

    // In-place reduced row echelon form; returns pivot column indices.
    // If transform != nullptr it accumulates the row operations (starts as I).
    std::vector<size_t> rref(FqMatrix* transform = nullptr);

    size_t rank() const;
    FqField::Elem det() const;
    std::optional<FqMatrix> inverse() const;

    // Columns form a basis of the right nullspace {x : A x = 0}.
    FqMatrix nullspace() const;

    // One solution x of A x = b, if any.
    std::optional<FqVec> solve(const FqVec& b) const;

    std::string to_string() const;

   private:
    const FqField* F_;
    size_t rows_, cols_;
    std::vector<FqField::Elem> a_;

    bool use_kernels() const {
        return F_->is_prime_field() && F_->ell() <= kern::kMaxPrime;
    }
    // row[r] op with external vector of length cols_
    void row_axpy(size_t r, const FqField::Elem* x, FqField::Elem c);
    void row_scale(size_t r, FqField::Elem c);
};

// Helpers on raw vectors.
FqVec vec_add(const FqField& F, const FqVec& a, const FqVec& b);
FqVec vec_sub(const FqField& F, const FqVec& a, const FqVec& b);
FqVec vec_scale(const FqField& F, const FqVec& a, FqField::Elem c);
void vec_axpy_inplace(const FqField& F, FqVec& y, const FqVec& x, FqField::Elem c);
bool vec_is_zero(const FqVec& v);

}  // namespace dlv

#endif
