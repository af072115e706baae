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

#include "dlv/hermite.hpp"

#include <algorithm>

namespace dlv {

namespace {

int poly_deg(const FqPoly& p) { return p.is_zero() ? -1 : p.degree(); }

}  // namespace

InvariantFactors smith_invariants(const PolyRing& A, const AMatrixCols& cols, size_t m) {
    size_t k = cols.size();
    // row-major working copy
    std::vector<AVec> M(m, AVec(k));
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < m; ++i) M[i][j] = cols[j][i];

    std::vector<FqPoly> diag;
    size_t top = 0;
    size_t rows = m, colc = k;
    while (top < rows && top < colc) {
        // find nonzero entry of minimal degree in the working block
        int best_deg = -1;
        size_t bi = 0, bj = 0;
        for (size_t i = top; i < rows; ++i)
            for (size_t j = top; j < colc; ++j) {
                if (M[i][j].is_zero()) continue;
                if (best_deg < 0 || M[i][j].degree() < best_deg) {
                    best_deg = M[i][j].degree();
                    bi = i;
                    bj = j;
                }
            }
        if (best_deg < 0) break;  // all zero
        std::swap(M[top], M[bi]);
        for (size_t i = top; i < rows; ++i) std::swap(M[i][top], M[i][bj]);
        for (;;) {
            // clear column below the pivot by division
            bool again = false;
            for (size_t i = top + 1; i < rows; ++i) {
                if (M[i][top].is_zero()) continue;
                FqPoly q, r;
                A.divrem(M[i][top], M[top][top], q, r);
                for (size_t j = top; j < colc; ++j)
                    M[i][j] = A.sub(M[i][j], A.mul(q, M[top][j]));
                if (!M[i][top].is_zero()) {
                    std::swap(M[top], M[i]);  // strictly smaller degree pivot
                    again = true;
                }
            }
            // clear row right of the pivot
            for (size_t j = top + 1; j < colc; ++j) {
                if (M[top][j].is_zero()) continue;
                FqPoly q, r;
                A.divrem(M[top][j], M[top][top], q, r);
                for (size_t i = top; i < rows; ++i)
                    M[i][j] = A.sub(M[i][j], A.mul(q, M[i][top]));
                if (!M[top][j].is_zero()) {
                    for (size_t i = top; i < rows; ++i) std::swap(M[i][top], M[i][j]);
                    again = true;
                }
            }
            if (again) continue;
            // pivot must divide every remaining entry
            bool fixed = false;
            for (size_t i = top + 1; i < rows && !fixed; ++i)
                for (size_t j = top + 1; j < colc && !fixed; ++j) {
                    if (M[i][j].is_zero()) continue;
                    FqPoly q, r;
                    A.divrem(M[i][j], M[top][top], q, r);
                    if (!r.is_zero()) {
                        for (size_t jj = top; jj < colc; ++jj)
                            M[top][jj] = A.add(M[top][jj], M[i][jj]);
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        diag.push_back(A.monic(M[top][top]));
        ++top;
    }
    InvariantFactors out;
    out.factors = std::move(diag);
    while (out.factors.size() < m) out.factors.push_back(FqPoly::zero());
    return out;
}

AMatrixCols hermite_normal_form(const PolyRing& A, AMatrixCols cols, size_t m) {
    // drop zero columns
    cols.erase(std::remove_if(cols.begin(), cols.end(),
                              [](const AVec& c) {
                                  for (auto& x : c)
                                      if (!x.is_zero()) return false;
                                  return true;
                              }),
               cols.end());
    size_t r = 0;  // next pivot column slot
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    for (size_t row = 0; row < m && r < cols.size(); ++row) {
        // gcd-combine columns >= r to leave a single nonzero entry in this row
        for (;;) {
            size_t j1 = cols.size();
            for (size_t j = r; j < cols.size(); ++j)
                if (!cols[j][row].is_zero()) {
                    if (j1 == cols.size() ||
                        poly_deg(cols[j][row]) < poly_deg(cols[j1][row]))
                        j1 = j;
                }
            if (j1 == cols.size()) break;  // row has no support
            bool lone = true;
            for (size_t j2 = r; j2 < cols.size(); ++j2) {
                if (j2 == j1 || cols[j2][row].is_zero()) continue;
                lone = false;
                FqPoly q, rem;
                A.divrem(cols[j2][row], cols[j1][row], q, rem);
                for (size_t i = 0; i < m; ++i)
                    cols[j2][i] = A.sub(cols[j2][i], A.mul(q, cols[j1][i]));
            }
            if (lone) {
                std::swap(cols[r], cols[j1]);
                break;
            }
        }
        if (cols[r][row].is_zero()) continue;  // no pivot in this row
        // monic pivot
        if (!cols[r][row].is_monic()) {
            FqField::Elem s = A.field().inv(cols[r][row].lead());
            for (size_t i = 0; i < m; ++i) cols[r][i] = A.mul_scalar(cols[r][i], s);
        }
        // reduce this row in the earlier pivot columns
        for (size_t j = 0; j < r; ++j) {
            if (cols[j][row].is_zero()) continue;
            FqPoly q, rem;
            A.divrem(cols[j][row], cols[r][row], q, rem);
            if (q.is_zero()) continue;
            for (size_t i = 0; i < m; ++i) cols[j][i] = A.sub(cols[j][i], A.mul(q, cols[r][i]));
        }
        pivots.push_back({row, r});
        ++r;
    }
    cols.resize(r);
    return cols;
}

bool hermite_member(const PolyRing& A, const AMatrixCols& hnf, const AVec& v) {
    AVec w = v;
    size_t m = v.size();
    size_t j = 0;
    for (size_t row = 0; row < m; ++row) {
        // pivot column for this row, if any
        if (j < hnf.size()) {
            // pivot row of column j = first nonzero entry
            size_t prow = 0;
            while (prow < m && hnf[j][prow].is_zero()) ++prow;
            if (prow == row) {
                if (!w[row].is_zero()) {
                    FqPoly q, rem;
                    A.divrem(w[row], hnf[j][row], q, rem);
                    if (!rem.is_zero()) return false;
                    for (size_t i = 0; i < m; ++i) w[i] = A.sub(w[i], A.mul(q, hnf[j][i]));
                }
                ++j;
                continue;
            }
        }
        if (!w[row].is_zero()) return false;
    }
    for (auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

AMatrixCols kernel_lattice(const PolyRing& A, const AMatrixCols& cols, size_t m) {
    size_t k = cols.size();
    // column-reduce [M; I] jointly: operations on M mirrored on U
    AMatrixCols M = cols;
    AMatrixCols U;
    for (size_t j = 0; j < k; ++j) {
        AVec e(k);
        e[j] = A.one();
        U.push_back(std::move(e));
    }
    size_t r = 0;
    for (size_t row = 0; row < m && r < k; ++row) {
        for (;;) {
            size_t j1 = k;
            for (size_t j = r; j < k; ++j)
                if (!M[j][row].is_zero())
                    if (j1 == k || poly_deg(M[j][row]) < poly_deg(M[j1][row])) j1 = j;
            if (j1 == k) break;
            bool lone = true;
            for (size_t j2 = r; j2 < k; ++j2) {
                if (j2 == j1 || M[j2][row].is_zero()) continue;
                lone = false;
                FqPoly q, rem;
                A.divrem(M[j2][row], M[j1][row], q, rem);
                for (size_t i = 0; i < m; ++i) M[j2][i] = A.sub(M[j2][i], A.mul(q, M[j1][i]));
                for (size_t i = 0; i < k; ++i) U[j2][i] = A.sub(U[j2][i], A.mul(q, U[j1][i]));
            }
            if (lone) {
                std::swap(M[r], M[j1]);
                std::swap(U[r], U[j1]);
                break;
            }
        }
        if (r < k && !M[r][row].is_zero()) ++r;
    }
    // columns r..k-1 of M are zero; the matching U columns span the kernel
    AMatrixCols ker(U.begin() + r, U.end());
    return hermite_normal_form(A, std::move(ker), k);
}

CentralStructure::CentralStructure(const FqField& F, const FiniteGroup& G)
    : F_(&F), G_(&G), A_(F), classes_(G.conjugacy_classes()) {
    class_of_.assign(G.order(), 0);
    for (size_t c = 0; c < classes_.size(); ++c)
        for (auto g : classes_[c]) class_of_[g] = uint16_t(c);
    size_t mrank = classes_.size();
    mul_.assign(mrank * mrank, FqVec(mrank, 0));
    for (size_t i = 0; i < mrank; ++i)
        for (size_t j = 0; j < mrank; ++j) {
            // count products landing in each class; reduce counts mod ell
            std::vector<uint64_t> counts(mrank, 0);
            for (auto x : classes_[i])
                for (auto y : classes_[j]) counts[class_of_[G.op(x, y)]]++;
            FqVec v(mrank, 0);
            for (size_t c = 0; c < mrank; ++c) {
                // the count is divisible by |class c| times nothing in general;
                // the class-sum product z_i z_j = sum over elements: coefficient
                // of any g in class c is count(g)/1; counts are constant on c
                uint64_t per = counts[c] / classes_[c].size();
                v[c] = F.from_int(int64_t(per % F.ell()));
            }
            mul_[i * mrank + j] = std::move(v);
        }
}

AVec CentralStructure::one() const {
    AVec v(rank());
    v[class_of_[0]] = A_.one();
    return v;
}

AVec CentralStructure::add(const AVec& a, const AVec& b) const {
    AVec v(rank());
    for (size_t i = 0; i < rank(); ++i) v[i] = A_.add(a[i], b[i]);
    return v;
}

AVec CentralStructure::mul(const AVec& a, const AVec& b) const {
    AVec v(rank());
    for (size_t i = 0; i < rank(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < rank(); ++j) {
            if (b[j].is_zero()) continue;
            FqPoly p = A_.mul(a[i], b[j]);
            const FqVec& sc = basis_product(i, j);
            for (size_t c = 0; c < rank(); ++c)
                if (sc[c]) v[c] = A_.add(v[c], A_.mul_scalar(p, sc[c]));
        }
    }
    return v;
}

AVec CentralStructure::mul_poly(const AVec& a, const FqPoly& p) const {
    AVec v(rank());
    for (size_t i = 0; i < rank(); ++i) v[i] = A_.mul(a[i], p);
    return v;
}

bool CentralStructure::is_zero(const AVec& a) const {
    for (auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool CentralStructure::equal(const AVec& a, const AVec& b) const { return a == b; }

AVec CentralStructure::from_group_poly(const FqGroupRing& GR, const GrPoly& x) const {
    AVec out(rank());
    for (size_t deg = 0; deg < x.c.size(); ++deg) {
        const auto& coeff = x.c[deg];  // an F_q[G] element; must be central
        // verify constant on classes and collect
        for (size_t c = 0; c < rank(); ++c) {
            FqField::Elem v0 = coeff.c[classes_[c][0]];
            for (auto g : classes_[c])
                if (coeff.c[g] != v0)
                    throw Error("element is not central (class coefficients differ)");
            if (v0 != 0) {
                // add v0 * t^deg to component c
                std::vector<uint16_t> pc(deg + 1, 0);
                pc[deg] = v0;
                out[c] = A_.add(out[c], FqPoly(std::move(pc)));
            }
        }
    }
    return out;
}

CentralStructure::GrPoly CentralStructure::to_group_poly(const FqGroupRing& GR,
                                                         const AVec& a) const {
    PolyRingOf<FqGroupRing> P(GR);
    GrPoly out = P.zero();
    int maxdeg = -1;
    for (auto& p : a) maxdeg = std::max(maxdeg, p.is_zero() ? -1 : p.degree());
    if (maxdeg < 0) return out;
    out.c.assign(size_t(maxdeg) + 1, GR.zero());
    for (size_t c = 0; c < rank(); ++c) {
        if (a[c].is_zero()) continue;
        for (int d = 0; d <= a[c].degree(); ++d) {
            FqField::Elem v = a[c].coeff(size_t(d));
            if (v == 0) continue;
            for (auto g : classes_[c]) out.c[size_t(d)].c[g] = F_->add(out.c[size_t(d)].c[g], v);
        }
    }
    return P.trim(std::move(out));
}

std::string CentralStructure::to_string(const AVec& a) const {
    std::string s;
    for (size_t c = 0; c < rank(); ++c) {
        if (a[c].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + a[c].to_string(*F_) + ")*cl" + std::to_string(c);
    }
    return s.empty() ? "0" : s;
}

CentralIdeal central_ideal(const CentralStructure& Z, const std::vector<AVec>& gens) {
    AMatrixCols cols;
    for (auto& g : gens) {
        for (size_t b = 0; b < Z.rank(); ++b) {
            // (class sum b) * g
            AVec zb = Z.zero();
            zb[b] = Z.poly_ring().one();
            cols.push_back(Z.mul(zb, g));
        }
    }
    return CentralIdeal{hermite_normal_form(Z.poly_ring(), std::move(cols), Z.rank())};
}

bool ideal_member(const CentralStructure& Z, const CentralIdeal& I, const AVec& x) {
    return hermite_member(Z.poly_ring(), I.hnf, x);
}

bool ideal_contains(const CentralStructure& Z, const CentralIdeal& I, const CentralIdeal& J) {
    for (auto& col : J.hnf)
        if (!ideal_member(Z, I, col)) return false;
    return true;
}

bool ideal_equal(const CentralStructure& Z, const CentralIdeal& I, const CentralIdeal& J) {
    return I.hnf == J.hnf;
}

CentralIdeal ideal_product(const CentralStructure& Z, const CentralIdeal& I,
                           const CentralIdeal& J) {
    std::vector<AVec> gens;
    for (auto& a : I.hnf)
        for (auto& b : J.hnf) gens.push_back(Z.mul(a, b));
    return central_ideal(Z, gens);
}

}  // namespace dlv
