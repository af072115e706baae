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

#include "dlv/agmodule.hpp"

#include <random>

namespace dlv {

void FiniteAGModule::validate() const {
    if (g_act.size() != G->order()) throw ConfigError("module is missing group action matrices");
    for (uint16_t a = 0; a < G->order(); ++a)
        for (uint16_t b = 0; b < G->order(); ++b)
            if (!(g_act[a] * g_act[b] == g_act[G->op(a, b)]))
                throw ConfigError("module G-action does not realize the Cayley table");
    for (uint16_t a = 0; a < G->order(); ++a)
        if (!(g_act[a] * t_act == t_act * g_act[a]))
            throw ConfigError("module t-action does not commute with the G-action");
    if (frob)
        for (uint16_t a = 0; a < G->order(); ++a)
            if (!(g_act[a] * *frob == *frob * g_act[a]))
                throw ConfigError("module Frobenius does not commute with the G-action");
}

FqMatrix FiniteAGModule::poly_action(const FqPoly& p) const {
    FqMatrix r(*F, dim, dim);
    FqMatrix power = FqMatrix::identity(*F, dim);
    for (size_t k = 0; k <= (p.is_zero() ? 0 : size_t(p.degree())); ++k) {
        if (!p.is_zero() && p.coeff(k) != 0) r = r + power.scaled(p.coeff(k));
        if (k < (p.is_zero() ? 0 : size_t(p.degree()))) power = power * t_act;
    }
    return r;
}

FqMatrix FiniteAGModule::group_ring_action(const FqGroupRing::Elem& x) const {
    FqMatrix r(*F, dim, dim);
    for (uint16_t g = 0; g < G->order(); ++g)
        if (x.c[g] != 0) r = r + g_act[g].scaled(x.c[g]);
    return r;
}

InvariantFactors FiniteAGModule::invariant_factors() const {
    PolyRing A(*F);
    // columns of tI - T over A
    AMatrixCols cols(dim, AVec(dim));
    for (size_t j = 0; j < dim; ++j)
        for (size_t i = 0; i < dim; ++i) {
            FqPoly e = (i == j) ? FqPoly::t_power(1) : FqPoly::zero();
            FqPoly c = FqPoly::constant(t_act(i, j));
            cols[j][i] = A.sub(e, c);
        }
    auto inv = smith_invariants(A, cols, dim);
    // drop unit factors for readability, keep order
    std::vector<FqPoly> keep;
    for (auto& f : inv.factors)
        if (f.is_zero() || f.degree() > 0) keep.push_back(f);
    if (keep.empty()) keep.push_back(FqPoly::constant(1));
    return InvariantFactors{std::move(keep)};
}

size_t tate_h0_dim(const FiniteAGModule& M, uint16_t g) {
    const FqField& F = *M.F;
    // fixed space: kernel of (g - 1)
    FqMatrix diff = M.g_act[g] - FqMatrix::identity(F, M.dim);
    FqMatrix fixed = diff.nullspace();
    // norm: sum over the cyclic subgroup generated by g
    FqMatrix norm(F, M.dim, M.dim);
    uint16_t x = 0;
    do {
        norm = norm + M.g_act[x];
        x = M.G->op(x, g);
    } while (x != 0);
    size_t norm_rank = norm.rank();
    return fixed.cols() - norm_rank;
}

bool verify_free_basis(const FiniteAGModule& M, const std::vector<FqVec>& basis) {
    if (basis.size() * M.G->order() != M.dim) return false;
    return free_basis_matrix(M, basis).rank() == M.dim;
}

FqMatrix free_basis_matrix(const FiniteAGModule& M, const std::vector<FqVec>& basis) {
    std::vector<FqVec> cols;
    for (auto& m : basis)
        for (uint16_t g = 0; g < M.G->order(); ++g) cols.push_back(M.g_act[g].apply(m));
    return FqMatrix::from_cols(*M.F, cols);
}

namespace {

// Deterministic freeness decision over abelian G through the local blocks of
// F_q[G]: e_i M is free over the local ring R_i iff its minimal number of
// generators times dim R_i equals its dimension. Constructs generators by
// Nakayama lifting when every block passes.
std::optional<std::vector<FqVec>> abelian_block_basis(const FiniteAGModule& M,
                                                      std::string& fail_reason) {
    const FqField& F = *M.F;
    auto B = StructAlgebra::group_ring(F, *M.G);
    auto D = local_decomposition(B);
    size_t r = M.dim / M.G->order();
    std::vector<std::vector<FqVec>> block_gens(D.size());
    for (size_t bi = 0; bi < D.size(); ++bi) {
        const auto& blk = D.blocks[bi];
        FqGroupRing::Elem e;
        e.c = blk.idempotent;
        FqMatrix E = M.group_ring_action(e);
        // e_i M: column space
        FqMatrix ET = E.transposed();
        auto piv = ET.rref();
        std::vector<FqVec> sub;
        for (size_t k = 0; k < piv.size(); ++k) sub.push_back(ET.row(k));
        size_t dim_sub = sub.size();
        if (dim_sub != r * blk.basis.size()) {
            fail_reason = "block " + std::to_string(bi) + " has F_q-dimension " +
                          std::to_string(dim_sub) + ", free rank " + std::to_string(r) +
                          " requires " + std::to_string(r * blk.basis.size());
            return std::nullopt;
        }
        // radical action: J_i (e_i M)
        std::vector<FqVec> jm;
        for (auto& jv : blk.radical) {
            // jv is in block coordinates; map to an F_q[G] element
            FqVec in_B(B.dim(), 0);
            for (size_t k = 0; k < blk.basis.size(); ++k)
                in_B = B.add(in_B, B.mul_scalar(blk.basis[k], jv[k]));
            FqGroupRing::Elem je;
            je.c = in_B;
            FqMatrix JA = M.group_ring_action(je);
            for (auto& v : sub) jm.push_back(JA.apply(v));
        }
        size_t dim_jm = jm.empty() ? 0 : FqMatrix::from_cols(F, jm).rank();
        size_t field_dim = blk.basis.size() - blk.radical.size();  // dim of R_i / J_i
        if (dim_sub - dim_jm != r * field_dim) {
            fail_reason = "block " + std::to_string(bi) + ": minimal generator count " +
                          std::to_string((dim_sub - dim_jm) / std::max<size_t>(field_dim, 1)) +
                          " != free rank " + std::to_string(r);
            return std::nullopt;
        }
        // Nakayama lifting: grow R_i-span from J_i(e_i M) by r generators
        std::vector<FqVec> span = jm;
        std::vector<FqVec> gens;
        auto span_rank = [&](const std::vector<FqVec>& s) {
            return s.empty() ? size_t(0) : FqMatrix::from_cols(F, s).rank();
        };
        size_t cur = span_rank(span);
        for (auto& v : sub) {
            if (gens.size() == r) break;
            auto trial = span;
            trial.push_back(v);
            if (span_rank(trial) == cur) continue;
            gens.push_back(v);
            // add the whole R_i-orbit of v
            for (auto& bb : blk.basis) {
                FqGroupRing::Elem be;
                be.c = bb;
                span.push_back(M.group_ring_action(be).apply(v));
            }
            cur = span_rank(span);
        }
        if (gens.size() != r || cur != dim_sub) {
            fail_reason = "block " + std::to_string(bi) + ": generator lifting failed";
            return std::nullopt;
        }
        block_gens[bi] = std::move(gens);
    }
    // combine: m_j = sum over blocks of the j-th block generator
    std::vector<FqVec> basis;
    for (size_t j = 0; j < r; ++j) {
        FqVec v(M.dim, 0);
        for (size_t bi = 0; bi < D.size(); ++bi)
            for (size_t i = 0; i < M.dim; ++i) v[i] = F.add(v[i], block_gens[bi][j][i]);
        basis.push_back(std::move(v));
    }
    if (!verify_free_basis(M, basis)) {
        fail_reason = "combined block generators failed the rank check";
        return std::nullopt;
    }
    return basis;
}

}  // namespace

std::vector<FqVec> ct_free_basis(const FiniteAGModule& M, uint64_t seed) {
    const FqField& F = *M.F;
    uint32_t n = M.G->order();
    if (M.dim % n != 0)
        throw NotFree("dimension " + std::to_string(M.dim) + " is not divisible by |G| = " +
                      std::to_string(n));
    size_t r = M.dim / n;
    if (n == 1) {
        // every basis works
        std::vector<FqVec> basis;
        for (size_t j = 0; j < r; ++j) {
            FqVec v(M.dim, 0);
            v[j] = F.one();
            basis.push_back(std::move(v));
        }
        return basis;
    }
    std::string reason;
    if (M.G->abelian()) {
        auto basis = abelian_block_basis(M, reason);
        if (basis) return *basis;
        // fall through to certificates below
    } else {
        // randomized search, R = 64 |G| trials
        std::mt19937_64 rng(seed);
        for (uint32_t trial = 0; trial < 64 * n; ++trial) {
            std::vector<FqVec> basis;
            for (size_t j = 0; j < r; ++j) {
                FqVec v(M.dim);
                if (trial == 0) {
                    for (size_t i = 0; i < M.dim; ++i) v[i] = (i == j * n) ? F.one() : 0;
                } else {
                    for (auto& x : v) x = FqField::Elem(rng() % F.q());
                }
                basis.push_back(std::move(v));
            }
            if (verify_free_basis(M, basis)) return basis;
        }
        reason = "randomized search exhausted (" + std::to_string(64 * n) + " trials)";
    }
    // Tate-cohomology certificate over cyclic subgroups
    for (auto& sub : M.G->cyclic_subgroups()) {
        // find a generator of the subgroup
        for (auto g : sub) {
            if (g == 0) continue;
            if (M.G->element_order(g) != sub.size()) continue;
            size_t h0 = tate_h0_dim(M, g);
            if (h0 > 0)
                throw NotFree("cyclic subgroup of order " + std::to_string(sub.size()) +
                              " generated by g" + std::to_string(g) +
                              " has dim H^0(C, M) = " + std::to_string(h0));
            break;
        }
    }
    throw NotFree(reason.empty() ? "no free basis found" : reason);
}

RMatrix<FqGroupRing> action_over_group_ring(const FqGroupRing& GR, const FiniteAGModule& M,
                                            const FqMatrix& act) {
    if (!M.free_basis) throw NotFree("free basis required to express the action over F_q[G]");
    const auto& basis = *M.free_basis;
    size_t r = basis.size();
    uint32_t n = M.G->order();
    FqMatrix P = free_basis_matrix(M, basis);
    auto Pinv = P.inverse();
    if (!Pinv) throw Error("free basis matrix is singular");
    RMatrix<FqGroupRing> out(GR, r, r);
    for (size_t j = 0; j < r; ++j) {
        FqVec img = act.apply(basis[j]);
        FqVec y = Pinv->apply(img);
        for (size_t i = 0; i < r; ++i) {
            auto a = GR.make();
            for (uint16_t g = 0; g < n; ++g) a.c[g] = y[i * n + g];
            out(i, j) = std::move(a);
        }
    }
    return out;
}

}  // namespace dlv
