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

#include "dlv/decomposition.hpp"

#include <json.hpp>

namespace dlv {

Decomposition::Decomposition(const FqField& F, const FiniteGroup& G,
                             std::vector<DecompBlock> blocks)
    : F_(&F), G_(&G), blocks_(std::move(blocks)) {
    size_t total = 0;
    for (auto& b : blocks_) total += b.n * b.n * b.ring.dim();
    if (total != G.order())
        throw DecompositionInvalid("block dimensions do not sum to |G|");
    build_flat();
}

void Decomposition::build_flat() {
    size_t n = G_->order();
    flat_ = FqMatrix(*F_, n, n);
    for (uint16_t g = 0; g < n; ++g) {
        std::vector<RMatrix<StructAlgebra>> imgs;
        for (auto& b : blocks_) imgs.push_back(b.rho[g]);
        FqVec col = flatten_blocks(imgs);
        for (size_t i = 0; i < n; ++i) flat_(i, g) = col[i];
    }
    auto inv = flat_.inverse();
    if (inv) flat_inv_ = *inv;
}

FqVec Decomposition::flatten_blocks(const std::vector<RMatrix<StructAlgebra>>& imgs) const {
    FqVec out(G_->order(), 0);
    size_t off = 0;
    for (size_t bi = 0; bi < blocks_.size(); ++bi) {
        const auto& b = blocks_[bi];
        size_t d = b.ring.dim();
        for (size_t r = 0; r < b.n; ++r)
            for (size_t c = 0; c < b.n; ++c) {
                const auto& e = imgs[bi](r, c);
                for (size_t k = 0; k < d; ++k) out[off + (r * b.n + c) * d + k] = e[k];
            }
        off += b.n * b.n * d;
    }
    return out;
}

RMatrix<StructAlgebra> Decomposition::block_image(size_t i, const FqGroupRing::Elem& x) const {
    const auto& b = blocks_[i];
    RMatrix<StructAlgebra> m(b.ring, b.n, b.n);
    for (uint16_t g = 0; g < G_->order(); ++g) {
        if (x.c[g] == 0) continue;
        for (size_t r = 0; r < b.n; ++r)
            for (size_t c = 0; c < b.n; ++c)
                m(r, c) = b.ring.add(m(r, c), b.ring.mul_scalar(b.rho[g](r, c), x.c[g]));
    }
    return m;
}

FqGroupRing::Elem Decomposition::central_from_blocks(
    const FqGroupRing& GR, const std::vector<StructAlgebra::Elem>& scalars) const {
    std::vector<RMatrix<StructAlgebra>> imgs;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        const auto& b = blocks_[i];
        RMatrix<StructAlgebra> m(b.ring, b.n, b.n);
        for (size_t r = 0; r < b.n; ++r) m(r, r) = scalars[i];
        imgs.push_back(std::move(m));
    }
    FqVec flat = flatten_blocks(imgs);
    FqVec coeffs = flat_inv_.apply(flat);
    FqGroupRing::Elem out = GR.make();
    for (size_t g = 0; g < coeffs.size(); ++g) out.c[g] = coeffs[g];
    return out;
}

std::vector<std::string> Decomposition::verify() const {
    std::vector<std::string> bad;
    const auto& G = *G_;
    // hypothesis: ell does not divide |G'|
    if (G.commutator_subgroup_order() % F_->ell() == 0)
        bad.push_back("hypothesis violated: ell divides the commutator subgroup order");
    for (size_t bi = 0; bi < blocks_.size(); ++bi) {
        const auto& b = blocks_[bi];
        try {
            b.ring.verify();
        } catch (const Error& e) {
            bad.push_back("block " + std::to_string(bi) + ": " + e.what());
            continue;
        }
        if (b.rho.size() != G.order()) {
            bad.push_back("block " + std::to_string(bi) + ": missing group images");
            continue;
        }
        // unitality
        if (!rmat_equal(b.ring, b.rho[0], RMatrix<StructAlgebra>::identity(b.ring, b.n)))
            bad.push_back("block " + std::to_string(bi) + ": identity does not map to I");
        // multiplicativity on all Cayley pairs
        for (uint16_t x = 0; x < G.order(); ++x)
            for (uint16_t y = 0; y < G.order(); ++y) {
                auto prod = rmat_mul(b.ring, b.rho[x], b.rho[y]);
                if (!rmat_equal(b.ring, prod, b.rho[G.op(x, y)])) {
                    bad.push_back("block " + std::to_string(bi) + ": rho(" + std::to_string(x) +
                                  ")rho(" + std::to_string(y) + ") != rho(xy)");
                    x = uint16_t(G.order());
                    break;
                }
            }
    }
    // bijectivity: dimension count already enforced; linear map invertible
    if (flat_inv_.rows() != G.order())
        bad.push_back("the induced linear map F_q[G] -> blocks is not bijective");
    return bad;
}

void Decomposition::require_verified() const {
    if (!verified_) {
        auto bad = const_cast<Decomposition*>(this)->verify();
        if (!bad.empty()) throw DecompositionInvalid(bad.front());
        const_cast<Decomposition*>(this)->verified_ = true;
    }
}

FqGroupRing::Elem Decomposition::nrd(const FqGroupRing& GR,
                                     const RMatrix<FqGroupRing>& M) const {
    require_verified();
    return central_from_blocks(GR, block_dets(M));
}

std::vector<StructAlgebra::Elem> Decomposition::block_dets(
    const RMatrix<FqGroupRing>& M) const {
    std::vector<StructAlgebra::Elem> dets;
    for (size_t bi = 0; bi < blocks_.size(); ++bi) {
        const auto& b = blocks_[bi];
        RMatrix<StructAlgebra> big(b.ring, M.rows * b.n, M.cols * b.n);
        for (size_t i = 0; i < M.rows; ++i)
            for (size_t j = 0; j < M.cols; ++j) {
                auto img = block_image(bi, M(i, j));
                for (size_t r = 0; r < b.n; ++r)
                    for (size_t c = 0; c < b.n; ++c) big(i * b.n + r, j * b.n + c) = img(r, c);
            }
        dets.push_back(berkowitz_det(b.ring, big));
    }
    return dets;
}

Decomposition Decomposition::abelian(const FqField& F, const FiniteGroup& G) {
    if (!G.abelian()) throw DecompositionInvalid("identity decomposition needs an abelian group");
    DecompBlock b{1, StructAlgebra::group_ring(F, G), {}};
    for (uint16_t g = 0; g < G.order(); ++g) {
        RMatrix<StructAlgebra> m(b.ring, 1, 1);
        FqVec v(G.order(), 0);
        v[g] = F.one();
        m(0, 0) = v;
        b.rho.push_back(std::move(m));
    }
    return Decomposition(F, G, {std::move(b)});
}

Decomposition Decomposition::s3_f2(const FqField& F2, const FiniteGroup& S3) {
    if (F2.q() != 2) throw DecompositionInvalid("the bundled S3 decomposition is over F_2");
    // block 1: the sign-free quotient S3 -> C2, coefficient ring F_2[C2]
    FiniteGroup C2 = FiniteGroup::cyclic(2);
    DecompBlock b1{1, StructAlgebra::group_ring(F2, C2), {}};
    for (uint16_t g = 0; g < 6; ++g) {
        RMatrix<StructAlgebra> m(b1.ring, 1, 1);
        FqVec v(2, 0);
        v[g / 3] = 1;  // elements 0..2 are rotations, 3..5 are reflections
        m(0, 0) = v;
        b1.rho.push_back(std::move(m));
    }
    // block 2: the 2-dimensional representation S3 ~ GL_2(F_2)
    DecompBlock b2{2, StructAlgebra::base_field(F2), {}};
    auto mk = [&](int a, int b, int c, int d) {
        RMatrix<StructAlgebra> m(b2.ring, 2, 2);
        m(0, 0) = FqVec{uint16_t(a)};
        m(0, 1) = FqVec{uint16_t(b)};
        m(1, 0) = FqVec{uint16_t(c)};
        m(1, 1) = FqVec{uint16_t(d)};
        return m;
    };
    // generators: r = (0 1; 1 1), s = (0 1; 1 0); rho multiplicative over words
    std::vector<RMatrix<StructAlgebra>> rho(6, mk(1, 0, 0, 1));
    auto matmul = [&](const RMatrix<StructAlgebra>& x, const RMatrix<StructAlgebra>& y) {
        return rmat_mul(b2.ring, x, y);
    };
    RMatrix<StructAlgebra> R = mk(0, 1, 1, 1), S = mk(0, 1, 1, 0);
    rho[1] = R;
    rho[2] = matmul(R, R);
    rho[3] = S;
    rho[4] = matmul(S, R);
    rho[5] = matmul(S, rho[2]);
    b2.rho = std::move(rho);
    return Decomposition(F2, S3, {std::move(b1), std::move(b2)});
}

Decomposition catalog_decomposition(const FqField& F, const FiniteGroup& G) {
    if (G.abelian()) return Decomposition::abelian(F, G);
    if (G.order() == 6 && !G.abelian() && F.q() == 2) {
        // require the bundled S3 labelling (validated by construction)
        return Decomposition::s3_f2(F, G);
    }
    throw HypothesisViolated(
        "no cataloged matrix-ring decomposition for this group ring; supply one");
}

std::string decomposition_to_json(const Decomposition& D) {
    nlohmann::ordered_json j;
    j["group"] = D.group().name();
    j["order"] = D.group().order();
    j["ell"] = D.field().ell();
    j["e"] = D.field().e();
    j["blocks"] = nlohmann::ordered_json::array();
    for (auto& b : D.blocks()) {
        nlohmann::ordered_json jb;
        jb["n"] = b.n;
        jb["ring_dim"] = b.ring.dim();
        auto& table = jb["ring_mul"] = nlohmann::ordered_json::array();
        for (size_t i = 0; i < b.ring.dim(); ++i)
            for (size_t k = 0; k < b.ring.dim(); ++k) table.push_back(b.ring.basis_product(i, k));
        jb["ring_one"] = b.ring.one();
        auto& imgs = jb["images"] = nlohmann::ordered_json::array();
        for (auto& m : b.rho) {
            nlohmann::ordered_json jm = nlohmann::ordered_json::array();
            for (size_t r = 0; r < b.n; ++r)
                for (size_t c = 0; c < b.n; ++c) jm.push_back(m(r, c));
            imgs.push_back(jm);
        }
        j["blocks"].push_back(jb);
    }
    return j.dump(2);
}

Decomposition decomposition_from_json(const FqField& F, const FiniteGroup& G,
                                      const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    if (j.at("order").get<uint32_t>() != G.order())
        throw ConfigError("decomposition file group order mismatch");
    if (j.at("ell").get<uint32_t>() != F.ell() || j.at("e").get<uint32_t>() != F.e())
        throw ConfigError("decomposition file base-field mismatch");
    std::vector<DecompBlock> blocks;
    for (auto& jb : j.at("blocks")) {
        size_t n = jb.at("n").get<size_t>();
        size_t d = jb.at("ring_dim").get<size_t>();
        std::vector<FqVec> table;
        for (auto& row : jb.at("ring_mul")) table.push_back(row.get<FqVec>());
        FqVec one = jb.at("ring_one").get<FqVec>();
        StructAlgebra ring(F, d, std::move(table), std::move(one));
        DecompBlock b{n, std::move(ring), {}};
        for (auto& jm : jb.at("images")) {
            RMatrix<StructAlgebra> m(b.ring, n, n);
            size_t idx = 0;
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) m(r, c) = jm.at(idx++).get<FqVec>();
            b.rho.push_back(std::move(m));
        }
        blocks.push_back(std::move(b));
    }
    return Decomposition(F, G, std::move(blocks));
}

}  // namespace dlv
