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

#ifndef DLV_RINGS_HPP
#define DLV_RINGS_HPP

#include <concepts>
#include <cstddef>
#include <vector>

#include "dlv/error.hpp"

namespace dlv {

// Commutative unital ring interface. The base rings of this library
// (F_q[G] for abelian G, A[G], block rings R_i, truncated series) have zero
// divisors, so nothing here ever divides.
template <class R>
concept Ring = requires(const R r, const typename R::Elem& a, const typename R::Elem& b) {
    typename R::Elem;
    { r.zero() } -> std::convertible_to<typename R::Elem>;
    { r.one() } -> std::convertible_to<typename R::Elem>;
    { r.add(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.sub(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.mul(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.neg(a) } -> std::convertible_to<typename R::Elem>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
    { r.equal(a, b) } -> std::convertible_to<bool>;
};

// Dense matrix with entries in an arbitrary ring.
template <Ring R>
struct RMatrix {
    using Elem = typename R::Elem;
    size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    RMatrix() = default;
    RMatrix(const R& r, size_t rr, size_t cc) : rows(rr), cols(cc), a(rr * cc, r.zero()) {}

    const Elem& operator()(size_t i, size_t j) const { return a[i * cols + j]; }
    Elem& operator()(size_t i, size_t j) { return a[i * cols + j]; }

    static RMatrix identity(const R& r, size_t n) {
        RMatrix m(r, n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = r.one();
        return m;
    }
};

template <Ring R>
RMatrix<R> rmat_add(const R& r, const RMatrix<R>& x, const RMatrix<R>& y) {
    RMatrix<R> z(r, x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = r.add(x.a[i], y.a[i]);
    return z;
}

template <Ring R>
RMatrix<R> rmat_sub(const R& r, const RMatrix<R>& x, const RMatrix<R>& y) {
    RMatrix<R> z(r, x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = r.sub(x.a[i], y.a[i]);
    return z;
}

// Entrywise product x * y in the usual (row, col) order. Over noncommutative
// entry rings the factor order inside each sum is x-entry * y-entry.
template <Ring R>
RMatrix<R> rmat_mul(const R& r, const RMatrix<R>& x, const RMatrix<R>& y) {
    RMatrix<R> z(r, x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            if (r.is_zero(x(i, k))) continue;
            for (size_t j = 0; j < y.cols; ++j)
                z(i, j) = r.add(z(i, j), r.mul(x(i, k), y(k, j)));
        }
    return z;
}

template <Ring R>
RMatrix<R> rmat_scale(const R& r, const RMatrix<R>& x, const typename R::Elem& c) {
    RMatrix<R> z(r, x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = r.mul(c, x.a[i]);
    return z;
}

template <Ring R>
bool rmat_equal(const R& r, const RMatrix<R>& x, const RMatrix<R>& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (!r.equal(x.a[i], y.a[i])) return false;
    return true;
}

// Characteristic polynomial of a square matrix by the Berkowitz algorithm
// (division-free, valid over any commutative ring). Returns the coefficients
// of det(lambda*I - A), leading coefficient first (length n+1).
template <Ring R>
std::vector<typename R::Elem> berkowitz_charpoly(const R& r, const RMatrix<R>& A) {
    using E = typename R::Elem;
    size_t n = A.rows;
    std::vector<E> v{r.one()};
    if (n == 0) return v;
    for (size_t i = 1; i <= n; ++i) {
        // principal i x i block; partition with last row/column split off
        // q[k] = Row * M^{k} * Col for the (i-1)x(i-1) leading block M
        size_t m = i - 1;
        std::vector<E> q;
        q.reserve(m);
        if (m > 0) {
            std::vector<E> w(m);
            for (size_t k = 0; k < m; ++k) w[k] = A(k, m);  // Col
            for (size_t k = 0; k < m; ++k) {
                E s = r.zero();
                for (size_t j = 0; j < m; ++j) s = r.add(s, r.mul(A(m, j), w[j]));  // Row * w
                q.push_back(s);
                if (k + 1 < m) {
                    std::vector<E> w2(m, r.zero());
                    for (size_t x = 0; x < m; ++x)
                        for (size_t y = 0; y < m; ++y) w2[x] = r.add(w2[x], r.mul(A(x, y), w[y]));
                    w = std::move(w2);
                }
            }
        }
        // first column of the (i+1) x i Toeplitz matrix
        std::vector<E> col(i + 1);
        col[0] = r.one();
        col[1] = r.neg(A(m, m));
        for (size_t k = 0; k + 2 <= i; ++k) col[k + 2] = r.neg(q[k]);
        // v_new = T * v, T lower-triangular Toeplitz with that first column
        std::vector<E> v2(i + 1, r.zero());
        for (size_t row = 0; row <= i; ++row)
            for (size_t j = 0; j < v.size() && j <= row; ++j)
                v2[row] = r.add(v2[row], r.mul(col[row - j], v[j]));
        v = std::move(v2);
    }
    return v;
}

// Division-free determinant via Berkowitz: det(A) = (-1)^n * p(0).
template <Ring R>
typename R::Elem berkowitz_det(const R& r, const RMatrix<R>& A) {
    auto p = berkowitz_charpoly(r, A);
    auto c = p.back();
    return (A.rows % 2 == 1) ? r.neg(c) : c;
}

// Cofactor-expansion determinant, the test oracle for sizes <= 4.
template <Ring R>
typename R::Elem cofactor_det(const R& r, const RMatrix<R>& A) {
    size_t n = A.rows;
    if (n == 0) return r.one();
    if (n == 1) return A(0, 0);
    typename R::Elem s = r.zero();
    for (size_t j = 0; j < n; ++j) {
        RMatrix<R> minor(r, n - 1, n - 1);
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t c2 = 0; c2 < n; ++c2) {
                if (c2 == j) continue;
                minor(i - 1, cc++) = A(i, c2);
            }
        }
        auto term = r.mul(A(0, j), cofactor_det(r, minor));
        s = (j % 2 == 0) ? r.add(s, term) : r.sub(s, term);
    }
    return s;
}

// Dense polynomials over an arbitrary ring (low degree first, trimmed).
template <Ring R>
class PolyRingOf {
   public:
    using Base = R;
    struct Elem {
        std::vector<typename R::Elem> c;
        bool operator==(const Elem&) const = default;
    };

    explicit PolyRingOf(const R& base) : b_(&base) {}
    const R& base() const { return *b_; }

    Elem zero() const { return {}; }
    Elem one() const { return {{b_->one()}}; }
    Elem constant(const typename R::Elem& x) const {
        if (b_->is_zero(x)) return {};
        return {{x}};
    }
    Elem t_power(size_t k, typename R::Elem lead) const {
        if (b_->is_zero(lead)) return {};
        Elem p;
        p.c.assign(k + 1, b_->zero());
        p.c[k] = lead;
        return p;
    }

    bool is_zero(const Elem& a) const { return a.c.empty(); }
    int degree(const Elem& a) const { return int(a.c.size()) - 1; }  // -1 for 0
    typename R::Elem coeff(const Elem& a, size_t k) const {
        return k < a.c.size() ? a.c[k] : b_->zero();
    }
    typename R::Elem lead(const Elem& a) const { return a.c.empty() ? b_->zero() : a.c.back(); }

    bool equal(const Elem& a, const Elem& b) const {
        if (a.c.size() != b.c.size()) return false;
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!b_->equal(a.c[i], b.c[i])) return false;
        return true;
    }

    Elem trim(Elem a) const {
        while (!a.c.empty() && b_->is_zero(a.c.back())) a.c.pop_back();
        return a;
    }

    Elem add(const Elem& x, const Elem& y) const {
        Elem z;
        z.c.resize(std::max(x.c.size(), y.c.size()), b_->zero());
        for (size_t i = 0; i < z.c.size(); ++i)
            z.c[i] = b_->add(coeff(x, i), coeff(y, i));
        return trim(std::move(z));
    }
    Elem neg(const Elem& x) const {
        Elem z = x;
        for (auto& v : z.c) v = b_->neg(v);
        return z;
    }
    Elem sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }
    Elem mul(const Elem& x, const Elem& y) const {
        if (x.c.empty() || y.c.empty()) return {};
        Elem z;
        z.c.assign(x.c.size() + y.c.size() - 1, b_->zero());
        for (size_t i = 0; i < x.c.size(); ++i) {
            if (b_->is_zero(x.c[i])) continue;
            for (size_t j = 0; j < y.c.size(); ++j)
                z.c[i + j] = b_->add(z.c[i + j], b_->mul(x.c[i], y.c[j]));
        }
        return trim(std::move(z));
    }
    Elem mul_base(const Elem& x, const typename R::Elem& s) const {
        Elem z = x;
        for (auto& v : z.c) v = b_->mul(s, v);
        return trim(std::move(z));
    }
    Elem pow(Elem base, uint64_t n) const {
        Elem r = one();
        while (n) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        return r;
    }

   private:
    const R* b_;
};

// The truncated power series ring R[Z]/Z^N; elements are vectors of exactly
// N base coefficients (Z-degree 0..N-1).
template <Ring R>
class TruncRing {
   public:
    using Base = R;
    struct Elem {
        std::vector<typename R::Elem> c;
        bool operator==(const Elem&) const = default;
    };

    TruncRing(const R& base, size_t N) : b_(&base), n_(N) {}
    const R& base() const { return *b_; }
    size_t N() const { return n_; }

    Elem zero() const { return make(); }
    Elem one() const {
        Elem e = make();
        e.c[0] = b_->one();
        return e;
    }
    Elem make() const {
        Elem e;
        e.c.assign(n_, b_->zero());
        return e;
    }
    Elem from_base(const typename R::Elem& x) const {
        Elem e = make();
        e.c[0] = x;
        return e;
    }
    Elem z_power(size_t k, const typename R::Elem& x) const {
        Elem e = make();
        if (k < n_) e.c[k] = x;
        return e;
    }

    bool is_zero(const Elem& a) const {
        for (auto& v : a.c)
            if (!b_->is_zero(v)) return false;
        return true;
    }
    bool equal(const Elem& a, const Elem& b) const {
        for (size_t i = 0; i < n_; ++i)
            if (!b_->equal(a.c[i], b.c[i])) return false;
        return true;
    }

    Elem add(const Elem& x, const Elem& y) const {
        Elem z = make();
        for (size_t i = 0; i < n_; ++i) z.c[i] = b_->add(x.c[i], y.c[i]);
        return z;
    }
    Elem neg(const Elem& x) const {
        Elem z = x;
        for (auto& v : z.c) v = b_->neg(v);
        return z;
    }
    Elem sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }
    Elem mul(const Elem& x, const Elem& y) const {
        Elem z = make();
        for (size_t i = 0; i < n_; ++i) {
            if (b_->is_zero(x.c[i])) continue;
            for (size_t j = 0; i + j < n_; ++j)
                z.c[i + j] = b_->add(z.c[i + j], b_->mul(x.c[i], y.c[j]));
        }
        return z;
    }

    // Inverse of an element whose constant term is 1 (the only case needed:
    // truncated classes all have constant term 1).
    Elem inv_unit_one(const Elem& x) const {
        if (!b_->equal(x.c[0], b_->one()))
            throw Error("truncated-series inverse requires constant term 1");
        Elem y = make();
        y.c[0] = b_->one();
        for (size_t k = 1; k < n_; ++k) {
            typename R::Elem s = b_->zero();
            for (size_t j = 1; j <= k; ++j) s = b_->add(s, b_->mul(x.c[j], y.c[k - j]));
            y.c[k] = b_->neg(s);
        }
        return y;
    }

   private:
    const R* b_;
    size_t n_;
};

}  // namespace dlv

#endif
