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

#include "dlv/fq_matrix.hpp"

#include <sstream>

namespace dlv {

FqMatrix FqMatrix::identity(const FqField& F, size_t n) {
    FqMatrix m(F, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = F.one();
    return m;
}

FqMatrix FqMatrix::from_rows(const FqField& F, const std::vector<FqVec>& rows) {
    size_t c = rows.empty() ? 0 : rows[0].size();
    FqMatrix m(F, rows.size(), c);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    return m;
}

FqMatrix FqMatrix::from_cols(const FqField& F, const std::vector<FqVec>& cols) {
    size_t r = cols.empty() ? 0 : cols[0].size();
    FqMatrix m(F, r, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
    return m;
}

FqVec FqMatrix::col(size_t c) const {
    FqVec v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
    FqMatrix r(*F_, rows_, cols_);
    if (use_kernels())
        kern::vec_add(r.a_.data(), a_.data(), o.a_.data(), a_.size(), F_->ell());
    else
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], o.a_[i]);
    return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
    FqMatrix r(*F_, rows_, cols_);
    if (use_kernels())
        kern::vec_sub(r.a_.data(), a_.data(), o.a_.data(), a_.size(), F_->ell());
    else
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->sub(a_[i], o.a_[i]);
    return r;
}

FqMatrix FqMatrix::scaled(FqField::Elem c) const {
    FqMatrix r(*F_, rows_, cols_);
    if (use_kernels())
        kern::vec_scale(r.a_.data(), a_.data(), c, a_.size(), F_->ell());
    else
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(a_[i], c);
    return r;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    FqMatrix r(*F_, rows_, o.cols_);
    // accumulate row_i(r) += a(i,k) * row_k(o)
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            FqField::Elem c = (*this)(i, k);
            if (F_->is_zero(c)) continue;
            if (use_kernels())
                kern::vec_axpy(r.row_ptr(i), o.row_ptr(k), c, o.cols_, F_->ell());
            else
                for (size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = F_->add(r(i, j), F_->mul(c, o(k, j)));
        }
    }
    return r;
}

FqMatrix FqMatrix::transposed() const {
    FqMatrix r(*F_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

FqVec FqMatrix::apply(const FqVec& v) const {
    FqVec r(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        FqField::Elem s = 0;
        for (size_t j = 0; j < cols_; ++j) s = F_->add(s, F_->mul((*this)(i, j), v[j]));
        r[i] = s;
    }
    return r;
}

bool FqMatrix::is_zero() const {
    for (auto v : a_)
        if (v) return false;
    return true;
}

void FqMatrix::row_axpy(size_t r, const FqField::Elem* x, FqField::Elem c) {
    if (use_kernels())
        kern::vec_axpy(row_ptr(r), x, c, cols_, F_->ell());
    else
        for (size_t j = 0; j < cols_; ++j)
            (*this)(r, j) = F_->add((*this)(r, j), F_->mul(c, x[j]));
}

void FqMatrix::row_scale(size_t r, FqField::Elem c) {
    if (use_kernels())
        kern::vec_scale(row_ptr(r), row_ptr(r), c, cols_, F_->ell());
    else
        for (size_t j = 0; j < cols_; ++j) (*this)(r, j) = F_->mul((*this)(r, j), c);
}

std::vector<size_t> FqMatrix::rref(FqMatrix* transform) {
    if (transform) *transform = identity(*F_, rows_);
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t p = r;
        while (p < rows_ && (*this)(p, c) == 0) ++p;
        if (p == rows_) continue;
        if (p != r) {
            for (size_t j = 0; j < cols_; ++j) std::swap((*this)(r, j), (*this)(p, j));
            if (transform)
                for (size_t j = 0; j < rows_; ++j) std::swap((*transform)(r, j), (*transform)(p, j));
        }
        FqField::Elem inv = F_->inv((*this)(r, c));
        if (inv != F_->one()) {
            row_scale(r, inv);
            if (transform) transform->row_scale(r, inv);
        }
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            FqField::Elem v = (*this)(i, c);
            if (v == 0) continue;
            FqField::Elem mc = F_->neg(v);
            row_axpy(i, row_ptr(r), mc);
            if (transform) transform->row_axpy(i, transform->row_ptr(r), mc);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t FqMatrix::rank() const {
    FqMatrix copy = *this;
    return copy.rref().size();
}

FqField::Elem FqMatrix::det() const {
    FqMatrix m = *this;
    FqField::Elem d = F_->one();
    size_t n = rows_;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return F_->zero();
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(c, j), m(p, j));
            d = F_->neg(d);
        }
        d = F_->mul(d, m(c, c));
        FqField::Elem inv = F_->inv(m(c, c));
        for (size_t i = c + 1; i < n; ++i) {
            FqField::Elem v = m(i, c);
            if (v == 0) continue;
            FqField::Elem mc = F_->neg(F_->mul(v, inv));
            m.row_axpy(i, m.row_ptr(c), mc);
        }
    }
    return d;
}

std::optional<FqMatrix> FqMatrix::inverse() const {
    FqMatrix m = *this;
    FqMatrix t;
    auto piv = m.rref(&t);
    if (piv.size() != rows_ || rows_ != cols_) return std::nullopt;
    return t;
}

FqMatrix FqMatrix::nullspace() const {
    FqMatrix m = *this;
    auto pivots = m.rref();
    std::vector<char> is_pivot(cols_, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<FqVec> basis;
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        FqVec v(cols_, 0);
        v[c] = F_->one();
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = F_->neg(m(k, c));
        basis.push_back(std::move(v));
    }
    return from_cols(*F_, basis);
}

std::optional<FqVec> FqMatrix::solve(const FqVec& b) const {
    FqMatrix aug(*F_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    FqVec x(cols_, 0);
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, cols_);
    return x;
}

std::string FqMatrix::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << F_->to_string((*this)(i, j));
        os << "]";
    }
    return os.str();
}

FqVec vec_add(const FqField& F, const FqVec& a, const FqVec& b) {
    FqVec r(a.size());
    if (F.is_prime_field() && F.ell() <= kern::kMaxPrime)
        kern::vec_add(r.data(), a.data(), b.data(), a.size(), F.ell());
    else
        for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

FqVec vec_sub(const FqField& F, const FqVec& a, const FqVec& b) {
    FqVec r(a.size());
    if (F.is_prime_field() && F.ell() <= kern::kMaxPrime)
        kern::vec_sub(r.data(), a.data(), b.data(), a.size(), F.ell());
    else
        for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

FqVec vec_scale(const FqField& F, const FqVec& a, FqField::Elem c) {
    FqVec r(a.size());
    if (F.is_prime_field() && F.ell() <= kern::kMaxPrime)
        kern::vec_scale(r.data(), a.data(), c, a.size(), F.ell());
    else
        for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    return r;
}

void vec_axpy_inplace(const FqField& F, FqVec& y, const FqVec& x, FqField::Elem c) {
    if (F.is_prime_field() && F.ell() <= kern::kMaxPrime)
        kern::vec_axpy(y.data(), x.data(), c, x.size(), F.ell());
    else
        for (size_t i = 0; i < x.size(); ++i) y[i] = F.add(y[i], F.mul(c, x[i]));
}

bool vec_is_zero(const FqVec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

}  // namespace dlv
