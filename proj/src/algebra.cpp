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

#include "dlv/algebra.hpp"

#include <algorithm>
#include <random>

#include "dlv/fq_poly.hpp"

namespace dlv {

StructAlgebra::StructAlgebra(const FqField& F, size_t dim, std::vector<FqVec> mul_table,
                             FqVec one)
    : F_(&F), dim_(dim), mul_(std::move(mul_table)), one_(std::move(one)) {
    if (mul_.size() != dim_ * dim_) throw ConfigError("structure-constant table size mismatch");
    for (auto& v : mul_)
        if (v.size() != dim_) throw ConfigError("structure-constant vector size mismatch");
    if (one_.size() != dim_) throw ConfigError("unit vector size mismatch");
}

StructAlgebra StructAlgebra::group_ring(const FqField& F, const FiniteGroup& G) {
    size_t n = G.order();
    std::vector<FqVec> table(n * n, FqVec(n, 0));
    for (uint16_t i = 0; i < n; ++i)
        for (uint16_t j = 0; j < n; ++j) table[size_t(i) * n + j][G.op(i, j)] = F.one();
    FqVec one(n, 0);
    one[0] = F.one();
    return StructAlgebra(F, n, std::move(table), std::move(one));
}

StructAlgebra StructAlgebra::base_field(const FqField& F) {
    return StructAlgebra(F, 1, {FqVec{F.one()}}, FqVec{F.one()});
}

StructAlgebra::Elem StructAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem r = zero();
    for (size_t i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (b[j] == 0) continue;
            FqField::Elem c = F_->mul(a[i], b[j]);
            vec_axpy_inplace(*F_, r, mul_[i * dim_ + j], c);
        }
    }
    return r;
}

StructAlgebra::Elem StructAlgebra::pow(Elem a, uint64_t n) const {
    Elem r = one();
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

FqMatrix StructAlgebra::mult_matrix(const Elem& a) const {
    FqMatrix m(*F_, dim_, dim_);
    for (size_t j = 0; j < dim_; ++j) {
        Elem ej(dim_, 0);
        ej[j] = F_->one();
        Elem col = mul(a, ej);
        for (size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
}

std::optional<StructAlgebra::Elem> StructAlgebra::inv(const Elem& a) const {
    FqMatrix m = mult_matrix(a);
    return m.solve(one_);
}

void StructAlgebra::verify() const {
    auto basis = [&](size_t i) {
        Elem e(dim_, 0);
        e[i] = F_->one();
        return e;
    };
    for (size_t i = 0; i < dim_; ++i) {
        if (mul(one_, basis(i)) != basis(i) || mul(basis(i), one_) != basis(i))
            throw ConfigError("structure algebra: unit fails");
        for (size_t j = 0; j < dim_; ++j) {
            if (mul(basis(i), basis(j)) != mul(basis(j), basis(i)))
                throw ConfigError("structure algebra: not commutative");
            for (size_t k = 0; k < dim_; ++k)
                if (mul(mul(basis(i), basis(j)), basis(k)) !=
                    mul(basis(i), mul(basis(j), basis(k))))
                    throw ConfigError("structure algebra: not associative");
        }
    }
}

namespace {

// Matrix (over F_ell) of the additive map x -> x^ell on B, in the flattened
// F_ell-basis {beta_j * b_i}.
FqMatrix ell_power_matrix(const StructAlgebra& B, const FqField& Fell) {
    const FqField& F = B.field();
    size_t d = B.dim(), e = F.e();
    size_t n = d * e;
    FqMatrix M(Fell, n, n);
    for (size_t i = 0; i < d; ++i) {
        StructAlgebra::Elem bi(d, 0);
        bi[i] = F.one();
        StructAlgebra::Elem bil = B.pow(bi, F.ell());
        for (size_t j = 0; j < e; ++j) {
            // (beta_j b_i)^ell = beta_j^ell * b_i^ell
            FqField::Elem bj = F.from_coords([&] {
                std::vector<uint16_t> c(e, 0);
                c[j] = 1;
                return c;
            }());
            FqField::Elem bjl = F.pow(bj, F.ell());
            StructAlgebra::Elem img = B.mul_scalar(bil, bjl);
            // flatten: column index i*e+j
            for (size_t i2 = 0; i2 < d; ++i2) {
                auto coords = F.coords(img[i2]);
                for (size_t j2 = 0; j2 < e; ++j2) M(i2 * e + j2, i * e + j) = coords[j2];
            }
        }
    }
    return M;
}

std::vector<FqVec> radical_basis(const StructAlgebra& B) {
    const FqField& F = B.field();
    size_t d = B.dim(), e = F.e();
    FqField Fell = FqField::prime(F.ell());
    FqMatrix M = ell_power_matrix(B, Fell);
    // iterate until ell^m >= dim over F_ell
    size_t n = d * e;
    FqMatrix P = M;
    uint64_t reach = F.ell();
    while (reach < n) {
        P = P * P;
        reach = reach * reach;
    }
    FqMatrix K = P.nullspace();
    // unflatten kernel vectors to B-elements and extract an F_q-basis
    std::vector<FqVec> elems;
    for (size_t c = 0; c < K.cols(); ++c) {
        FqVec x(d, 0);
        for (size_t i = 0; i < d; ++i) {
            std::vector<uint16_t> coords(e);
            for (size_t j = 0; j < e; ++j) coords[j] = K(i * e + j, c);
            x[i] = F.from_coords(coords);
        }
        elems.push_back(std::move(x));
    }
    if (elems.empty()) return {};
    FqMatrix Mat = FqMatrix::from_cols(F, elems);
    FqMatrix MatT = Mat.transposed();
    auto piv = MatT.rref();
    std::vector<FqVec> basis;
    for (size_t r = 0; r < piv.size(); ++r) basis.push_back(MatT.row(r));
    return basis;
}

// Quotient data for S = B / span(J).
struct Quotient {
    std::vector<size_t> comp_idx;  // standard-basis indices giving a complement
    FqMatrix solve_mat;            // inverse of [complement | J] as columns
    StructAlgebra S;

    FqVec project(const StructAlgebra& B, const FqVec& x) const {
        FqVec full = solve_mat.apply(x);
        return FqVec(full.begin(), full.begin() + comp_idx.size());
    }
    FqVec lift(const StructAlgebra& B, const FqVec& s) const {
        FqVec x(B.dim(), 0);
        for (size_t k = 0; k < comp_idx.size(); ++k) x[comp_idx[k]] = s[k];
        return x;
    }
};

Quotient make_quotient(const StructAlgebra& B, const std::vector<FqVec>& J) {
    const FqField& F = B.field();
    size_t d = B.dim();
    // pick complement: standard basis vectors that grow the span of J
    std::vector<size_t> comp;
    std::vector<FqVec> cols(J.begin(), J.end());
    for (size_t i = 0; i < d && cols.size() < d; ++i) {
        FqVec ei(d, 0);
        ei[i] = F.one();
        auto trial = cols;
        trial.push_back(ei);
        if (FqMatrix::from_cols(F, trial).rank() == cols.size() + 1) {
            comp.push_back(i);
            cols.push_back(std::move(ei));
        }
    }
    // assemble [complement | J] and invert
    std::vector<FqVec> order;
    for (auto i : comp) {
        FqVec ei(d, 0);
        ei[i] = F.one();
        order.push_back(ei);
    }
    for (auto& j : J) order.push_back(j);
    FqMatrix Mfull = FqMatrix::from_cols(F, order);
    auto inv = Mfull.inverse();
    if (!inv) throw Error("quotient basis assembly failed");
    size_t s = comp.size();
    // multiplication on S through lift/project
    Quotient Q{comp, *inv, StructAlgebra::base_field(F)};
    std::vector<FqVec> table(s * s, FqVec(s, 0));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) {
            FqVec bi(d, 0), bj(d, 0);
            bi[comp[i]] = F.one();
            bj[comp[j]] = F.one();
            FqVec prod = B.mul(bi, bj);
            FqVec full = inv->apply(prod);
            table[i * s + j] = FqVec(full.begin(), full.begin() + s);
        }
    FqVec oneS = [&] {
        FqVec full = inv->apply(B.one());
        return FqVec(full.begin(), full.begin() + s);
    }();
    Q.S = StructAlgebra(F, s, std::move(table), std::move(oneS));
    return Q;
}

// minimal polynomial of x relative to the unital commutative algebra C
FqPoly minimal_polynomial(const StructAlgebra& C, const FqVec& x) {
    const FqField& F = C.field();
    std::vector<FqVec> pows{C.one()};
    FqVec cur = C.one();
    for (size_t k = 1; k <= C.dim(); ++k) {
        cur = C.mul(cur, x);
        // is cur in span(pows)? find relation cur = sum c_k pows
        FqMatrix M = FqMatrix::from_cols(F, pows);
        auto sol = M.solve(cur);
        if (sol) {
            std::vector<uint16_t> coeffs(k + 1, 0);
            for (size_t j = 0; j < k; ++j) coeffs[j] = F.neg((*sol)[j]);
            coeffs[k] = F.one();
            return FqPoly(std::move(coeffs));
        }
        pows.push_back(cur);
    }
    throw Error("minimal polynomial not found (dimension exceeded)");
}

FqVec eval_poly_at(const StructAlgebra& C, const FqPoly& p, const FqVec& x) {
    FqVec r = C.zero();
    for (size_t k = p.coeffs().size(); k-- > 0;) {
        r = C.mul(r, x);
        r = C.add(r, C.mul_scalar(C.one(), p.coeff(k)));
    }
    return r;
}

// orthogonal idempotents of the (etale) commutative algebra S summing to 1,
// each generating a field block
std::vector<FqVec> split_etale(const StructAlgebra& S, std::mt19937_64& rng) {
    const FqField& F = S.field();
    if (S.dim() == 1) return {S.one()};
    PolyRing P(F);
    for (int attempt = 0; attempt < 400; ++attempt) {
        FqVec x(S.dim());
        if (attempt < int(S.dim())) {
            // deterministic sweep of basis elements first
            for (size_t i = 0; i < S.dim(); ++i) x[i] = (i == size_t(attempt)) ? F.one() : 0;
        } else {
            for (auto& v : x) v = FqField::Elem(rng() % F.q());
        }
        FqPoly mu = minimal_polynomial(S, x);
        auto facs = factor_poly(F, mu, 1234 + attempt);
        if (facs.size() == 1 && facs[0].second == 1) {
            if (mu.degree() == int(S.dim())) return {S.one()};  // S is a field
            continue;                                           // x does not split
        }
        // CRT idempotents for the distinct factors
        std::vector<FqVec> idems;
        for (auto& [f, mult] : facs) {
            FqPoly q = P.div_exact(mu, P.pow(f, uint64_t(mult)));
            FqPoly u, v;
            P.xgcd(q, P.pow(f, uint64_t(mult)), u, v);
            // u*q = 1 mod f^mult; e = (u*q)(x)
            FqVec e = eval_poly_at(S, P.mul(u, q), x);
            idems.push_back(std::move(e));
        }
        // recurse into each factor subalgebra
        std::vector<FqVec> out;
        for (auto& e : idems) {
            // subalgebra e*S: basis = column space of multiplication by e
            FqMatrix Me = S.mult_matrix(e);
            FqMatrix MeT = Me.transposed();
            auto piv = MeT.rref();
            std::vector<FqVec> sub_basis;
            for (size_t r = 0; r < piv.size(); ++r) sub_basis.push_back(MeT.row(r));
            FqMatrix Bm = FqMatrix::from_cols(F, sub_basis);
            // coords: solve Bm * c = v
            auto coords = [&](const FqVec& v) {
                auto c = Bm.solve(v);
                if (!c) throw Error("subalgebra coordinate solve failed");
                return *c;
            };
            size_t sd = sub_basis.size();
            std::vector<FqVec> table(sd * sd, FqVec(sd, 0));
            for (size_t i = 0; i < sd; ++i)
                for (size_t j = 0; j < sd; ++j)
                    table[i * sd + j] = coords(S.mul(sub_basis[i], sub_basis[j]));
            StructAlgebra Sub(F, sd, std::move(table), coords(e));
            auto sub_idems = split_etale(Sub, rng);
            for (auto& si : sub_idems) {
                // map back to S coordinates
                FqVec v = S.zero();
                for (size_t k = 0; k < sd; ++k)
                    v = S.add(v, S.mul_scalar(sub_basis[k], si[k]));
                out.push_back(std::move(v));
            }
        }
        return out;
    }
    throw Error("etale splitting budget exceeded");
}

// Hensel lifting of an idempotent along the nilradical: e <- 3e^2 - 2e^3.
FqVec lift_idempotent(const StructAlgebra& B, FqVec e) {
    for (int it = 0; it < 64; ++it) {
        FqVec e2 = B.mul(e, e);
        if (e2 == e) return e;
        FqVec e3 = B.mul(e2, e);
        FqVec three_e2 = B.mul_scalar(e2, B.field().from_int(3));
        FqVec two_e3 = B.mul_scalar(e3, B.field().from_int(2));
        e = B.sub(three_e2, two_e3);
    }
    throw Error("idempotent lifting did not converge");
}

}  // namespace

LocalDecomposition local_decomposition(const StructAlgebra& B, uint64_t seed) {
    const FqField& F = B.field();
    std::mt19937_64 rng(seed);
    LocalDecomposition out;
    out.radical = radical_basis(B);

    // split off primitive idempotents one at a time
    struct Pending {
        StructAlgebra alg;
        std::vector<FqVec> basis;  // basis of this subalgebra in B-coordinates
    };
    std::vector<FqVec> prim_idems;  // in B coordinates
    std::vector<Pending> stack;
    {
        std::vector<FqVec> basis;
        for (size_t i = 0; i < B.dim(); ++i) {
            FqVec e(B.dim(), 0);
            e[i] = F.one();
            basis.push_back(e);
        }
        stack.push_back({B, std::move(basis)});
    }
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        auto J = radical_basis(cur.alg);
        Quotient Q = make_quotient(cur.alg, J);
        auto idemsS = split_etale(Q.S, rng);
        if (idemsS.size() == 1) {
            // local: unit is the primitive idempotent
            FqVec v = B.zero();
            for (size_t k = 0; k < cur.alg.dim(); ++k)
                v = B.add(v, B.mul_scalar(cur.basis[k], cur.alg.one()[k]));
            prim_idems.push_back(std::move(v));
            continue;
        }
        // lift the first idempotent, split, push both parts
        FqVec f = lift_idempotent(cur.alg, Q.lift(cur.alg, idemsS[0]));
        FqVec g = cur.alg.sub(cur.alg.one(), f);
        for (const FqVec& idem : {f, g}) {
            FqMatrix Mi = cur.alg.mult_matrix(idem);
            FqMatrix MiT = Mi.transposed();
            auto piv = MiT.rref();
            std::vector<FqVec> sub_basis_local;
            for (size_t r = 0; r < piv.size(); ++r) sub_basis_local.push_back(MiT.row(r));
            FqMatrix Bm = FqMatrix::from_cols(F, sub_basis_local);
            auto coords = [&](const FqVec& v) {
                auto c = Bm.solve(v);
                if (!c) throw Error("idempotent block coordinate solve failed");
                return *c;
            };
            size_t sd = sub_basis_local.size();
            std::vector<FqVec> table(sd * sd, FqVec(sd, 0));
            for (size_t i = 0; i < sd; ++i)
                for (size_t j = 0; j < sd; ++j)
                    table[i * sd + j] =
                        coords(cur.alg.mul(sub_basis_local[i], sub_basis_local[j]));
            StructAlgebra Sub(F, sd, std::move(table), coords(idem));
            std::vector<FqVec> basis_in_B;
            for (auto& sb : sub_basis_local) {
                FqVec v = B.zero();
                for (size_t k = 0; k < cur.alg.dim(); ++k)
                    v = B.add(v, B.mul_scalar(cur.basis[k], sb[k]));
                basis_in_B.push_back(std::move(v));
            }
            stack.push_back({std::move(Sub), std::move(basis_in_B)});
        }
    }

    // build block data in B coordinates
    for (auto& e : prim_idems) {
        FqMatrix Me = B.mult_matrix(e);
        FqMatrix MeT = Me.transposed();
        auto piv = MeT.rref();
        std::vector<FqVec> basis;
        for (size_t r = 0; r < piv.size(); ++r) basis.push_back(MeT.row(r));
        FqMatrix basis_mat = FqMatrix::from_cols(F, basis);
        size_t sd = basis.size();
        auto coords = [&](const FqVec& v) {
            auto c = basis_mat.solve(v);
            if (!c) throw Error("block coordinate solve failed");
            return *c;
        };
        std::vector<FqVec> table(sd * sd, FqVec(sd, 0));
        for (size_t i = 0; i < sd; ++i)
            for (size_t j = 0; j < sd; ++j) table[i * sd + j] = coords(B.mul(basis[i], basis[j]));
        StructAlgebra ring(F, sd, std::move(table), coords(e));
        // projection matrix: x -> coords of e*x
        FqMatrix to_block(F, sd, B.dim());
        for (size_t j = 0; j < B.dim(); ++j) {
            FqVec ej(B.dim(), 0);
            ej[j] = F.one();
            FqVec c = coords(B.mul(e, ej));
            for (size_t i = 0; i < sd; ++i) to_block(i, j) = c[i];
        }
        auto rad = radical_basis(ring);
        out.blocks.push_back(LocalBlock{e, std::move(basis), std::move(basis_mat),
                                        std::move(ring), std::move(rad), std::move(to_block)});
    }
    // deterministic order: sort blocks by (dim, idempotent coords)
    std::sort(out.blocks.begin(), out.blocks.end(), [](const LocalBlock& a, const LocalBlock& b) {
        if (a.basis.size() != b.basis.size()) return a.basis.size() < b.basis.size();
        return a.idempotent < b.idempotent;
    });
    return out;
}

bool is_unit(const StructAlgebra& B, const LocalDecomposition& D, const FqVec& x) {
    const FqField& F = B.field();
    for (auto& blk : D.blocks) {
        FqVec comp = blk.to_block.apply(x);
        if (vec_is_zero(comp)) return false;
        if (blk.radical.empty()) continue;
        // unit in the local block iff not in the radical
        FqMatrix R = FqMatrix::from_cols(F, blk.radical);
        std::vector<FqVec> cols = blk.radical;
        cols.push_back(comp);
        if (FqMatrix::from_cols(F, cols).rank() == R.rank()) return false;
    }
    return true;
}

}  // namespace dlv
