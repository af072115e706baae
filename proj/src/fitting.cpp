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

#include "dlv/fitting.hpp"

#include <algorithm>

namespace dlv {

namespace {

using BlockPolyRing = PolyRingOf<StructAlgebra>;
using BlockPoly = BlockPolyRing::Elem;

// image of an A[G]-polynomial entry in block bi: a polynomial in t whose
// coefficients are n x n matrices over R_i, laid out as a matrix of polys
RMatrix<BlockPolyRing> block_poly_image(const Decomposition& D, size_t bi, const AGPoly& p) {
    const auto& b = D.blocks()[bi];
    BlockPolyRing BP(b.ring);
    RMatrix<BlockPolyRing> out(BP, b.n, b.n);
    for (size_t deg = 0; deg < p.c.size(); ++deg) {
        auto img = D.block_image(bi, p.c[deg]);
        for (size_t r = 0; r < b.n; ++r)
            for (size_t c = 0; c < b.n; ++c) {
                if (b.ring.is_zero(img(r, c))) continue;
                out(r, c) = BP.add(out(r, c), BP.t_power(deg, img(r, c)));
            }
    }
    return out;
}

// central element with block component `comp` (a polynomial over R_i) in
// block bi and zero elsewhere, in class-sum coordinates
AVec central_from_block_poly(const CentralStructure& Z, const FqGroupRing& GR,
                             const Decomposition& D, size_t bi, const BlockPoly& comp) {
    PolyRingOf<FqGroupRing> P(GR);
    AGPoly out = P.zero();
    out.c.assign(comp.c.size(), GR.zero());
    for (size_t deg = 0; deg < comp.c.size(); ++deg) {
        std::vector<StructAlgebra::Elem> scalars;
        for (size_t i = 0; i < D.num_blocks(); ++i)
            scalars.push_back(i == bi ? comp.c[deg] : D.blocks()[i].ring.zero());
        out.c[deg] = D.central_from_blocks(GR, scalars);
    }
    return Z.from_group_poly(GR, P.trim(std::move(out)));
}

void minor_combinations(size_t a, size_t b, std::vector<size_t>& idx, size_t start,
                        const std::function<void(const std::vector<size_t>&)>& fn) {
    if (idx.size() == b) {
        fn(idx);
        return;
    }
    for (size_t j = start; j + (b - idx.size()) <= a; ++j) {
        idx.push_back(j);
        minor_combinations(a, b, idx, j + 1, fn);
        idx.pop_back();
    }
}

}  // namespace

CentralIdeal fitting_ideal(const CentralStructure& Z, const FqGroupRing& GR,
                           const Decomposition& D, const AGMatrix& P) {
    D.require_verified();
    size_t b = P.rows, a = P.cols;
    if (a < b)
        throw NotFinitePresentation("fewer relations than generators: cokernel is not finite");
    std::vector<AVec> gens;
    for (size_t bi = 0; bi < D.num_blocks(); ++bi) {
        const auto& blk = D.blocks()[bi];
        BlockPolyRing BP(blk.ring);
        size_t rb = b * blk.n, ra = a * blk.n;
        RMatrix<BlockPolyRing> big(BP, rb, ra);
        {
            AGPolyRing AGP(GR);
            for (size_t i = 0; i < b; ++i)
                for (size_t j = 0; j < a; ++j) {
                    auto img = block_poly_image(D, bi, P(i, j));
                    for (size_t r = 0; r < blk.n; ++r)
                        for (size_t c = 0; c < blk.n; ++c)
                            big(i * blk.n + r, j * blk.n + c) = img(r, c);
                }
        }
        // ideal of all rb x rb minors
        std::vector<size_t> idx;
        minor_combinations(ra, rb, idx, 0, [&](const std::vector<size_t>& cols) {
            RMatrix<BlockPolyRing> sub(BP, rb, rb);
            for (size_t i = 0; i < rb; ++i)
                for (size_t j = 0; j < rb; ++j) sub(i, j) = big(i, cols[j]);
            BlockPoly det = berkowitz_det(BP, sub);
            if (!BP.is_zero(det)) gens.push_back(central_from_block_poly(Z, GR, D, bi, det));
        });
    }
    if (gens.empty()) throw NotFinitePresentation("all maximal minors vanish");
    return central_ideal(Z, gens);
}

CentralIdeal principal_central_ideal(const CentralStructure& Z, const AVec& gen) {
    return central_ideal(Z, {gen});
}

AVec nrd_poly_matrix(const CentralStructure& Z, const FqGroupRing& GR, const Decomposition& D,
                     const AGMatrix& M) {
    D.require_verified();
    AVec out = Z.zero();
    bool first = true;
    for (size_t bi = 0; bi < D.num_blocks(); ++bi) {
        const auto& blk = D.blocks()[bi];
        BlockPolyRing BP(blk.ring);
        size_t n = M.rows * blk.n;
        RMatrix<BlockPolyRing> big(BP, n, n);
        for (size_t i = 0; i < M.rows; ++i)
            for (size_t j = 0; j < M.cols; ++j) {
                auto img = block_poly_image(D, bi, M(i, j));
                for (size_t r = 0; r < blk.n; ++r)
                    for (size_t c = 0; c < blk.n; ++c) big(i * blk.n + r, j * blk.n + c) = img(r, c);
            }
        BlockPoly det = berkowitz_det(BP, big);
        AVec part = central_from_block_poly(Z, GR, D, bi, det);
        out = first ? part : Z.add(out, part);
        first = false;
    }
    return out;
}

AGMatrix char_presentation(const FqGroupRing& GR, const FiniteAGModule& M) {
    AGPolyRing P(GR);
    auto T = action_over_group_ring(GR, M, M.t_act);
    AGMatrix out(P, T.rows, T.cols);
    for (size_t i = 0; i < T.rows; ++i)
        for (size_t j = 0; j < T.cols; ++j) {
            AGPoly e = P.constant(GR.neg(T(i, j)));
            if (i == j) e = P.add(e, P.t_power(1, GR.one()));
            out(i, j) = std::move(e);
        }
    return out;
}

CentralIdeal annihilator_ideal(const CentralStructure& Z, const FiniteAGModule& M) {
    const FqField& F = *M.F;
    const PolyRing& A = Z.poly_ring();
    size_t d = M.dim, m = Z.rank();
    size_t dd = d * d;
    // columns: images of class sums (constants), then t*I - L on End(M)
    AMatrixCols cols;
    for (size_t c = 0; c < m; ++c) {
        FqMatrix act(F, d, d);
        for (auto g : Z.group().conjugacy_classes()[c]) act = act + M.g_act[g];
        AVec v(dd);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) v[i * d + j] = FqPoly::constant(act(i, j));
        cols.push_back(std::move(v));
    }
    // L(X) = T X, vectorized row-major: L = T (x) I
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            AVec v(dd);
            // t * E_ij - T * E_ij ; (T E_ij)_{kj} = T_{ki}
            v[i * d + j] = FqPoly::t_power(1);
            for (size_t k = 0; k < d; ++k) {
                FqPoly c = FqPoly::constant(M.t_act(k, i));
                v[k * d + j] = A.sub(v[k * d + j], c);
            }
            cols.push_back(std::move(v));
        }
    AMatrixCols ker = kernel_lattice(A, cols, dd);
    // project to the first m coordinates
    std::vector<AVec> gens;
    for (auto& k : ker) gens.push_back(AVec(k.begin(), k.begin() + m));
    // close under Z-multiplication and normalize
    return central_ideal(Z, gens);
}

AGMatrix module_presentation(const FqGroupRing& GR, const FiniteAGModule& M) {
    const FqField& F = *M.F;
    const FiniteGroup& G = *M.G;
    uint32_t n = G.order();
    AGPolyRing P(GR);
    // F_q[G]-generators of M (greedy orbit span)
    std::vector<FqVec> gens;
    std::vector<FqVec> span;
    auto span_rank = [&](const std::vector<FqVec>& s) {
        return s.empty() ? size_t(0) : FqMatrix::from_cols(F, s).rank();
    };
    size_t cur = 0;
    for (size_t i = 0; i < M.dim && cur < M.dim; ++i) {
        FqVec v(M.dim, 0);
        v[i] = F.one();
        auto trial = span;
        trial.push_back(v);
        if (span_rank(trial) == cur) continue;
        gens.push_back(v);
        for (uint16_t g = 0; g < n; ++g) span.push_back(M.g_act[g].apply(v));
        cur = span_rank(span);
    }
    size_t k = gens.size();
    // surjection F_q[G]^k -> M as an F_q-matrix (columns indexed (j, g))
    std::vector<FqVec> surj_cols;
    for (size_t j = 0; j < k; ++j)
        for (uint16_t g = 0; g < n; ++g) surj_cols.push_back(M.g_act[g].apply(gens[j]));
    FqMatrix S = FqMatrix::from_cols(F, surj_cols);
    // t-action relations: t e_j - lift(t gens[j])
    std::vector<std::vector<AGPoly>> rel_cols;
    for (size_t j = 0; j < k; ++j) {
        FqVec img = M.t_act.apply(gens[j]);
        auto sol = S.solve(img);
        if (!sol) throw Error("t-action lift failed in module presentation");
        std::vector<AGPoly> col(k, P.zero());
        col[j] = P.t_power(1, GR.one());
        for (size_t i = 0; i < k; ++i) {
            auto a = GR.make();
            for (uint16_t g = 0; g < n; ++g) a.c[g] = (*sol)[i * n + g];
            col[i] = P.sub(col[i], P.constant(a));
        }
        rel_cols.push_back(std::move(col));
    }
    // F_q[G]-syzygies: kernel of the surjection, thinned to orbit generators
    FqMatrix K = S.nullspace();
    std::vector<FqVec> ker_span;
    size_t kcur = 0;
    for (size_t c = 0; c < K.cols(); ++c) {
        FqVec v = K.col(c);
        auto trial = ker_span;
        trial.push_back(v);
        if (span_rank(trial) == kcur) continue;
        // keep as an A[G]-relation column (constant coefficients)
        std::vector<AGPoly> col(k, P.zero());
        for (size_t i = 0; i < k; ++i) {
            auto a = GR.make();
            for (uint16_t g = 0; g < n; ++g) a.c[g] = v[i * n + g];
            col[i] = P.constant(a);
        }
        rel_cols.push_back(std::move(col));
        // grow span by the G-orbit of v (g acts by translation on each factor)
        for (uint16_t g = 0; g < n; ++g) {
            FqVec gv(k * n, 0);
            for (size_t i = 0; i < k; ++i)
                for (uint16_t h = 0; h < n; ++h) gv[i * n + G.op(g, h)] = v[i * n + h];
            ker_span.push_back(std::move(gv));
        }
        kcur = span_rank(ker_span);
    }
    AGMatrix out(P, k, rel_cols.size());
    for (size_t j = 0; j < rel_cols.size(); ++j)
        for (size_t i = 0; i < k; ++i) out(i, j) = rel_cols[j][i];
    return out;
}

}  // namespace dlv
