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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dlv/decomposition.hpp"

using namespace dlv;

namespace {

FqGroupRing::Elem random_gr(std::mt19937_64& rng, const FqGroupRing& GR) {
    auto e = GR.make();
    for (auto& v : e.c) v = FqField::Elem(rng() % GR.base().q());
    return e;
}

}  // namespace

TEST_CASE("S3 structure") {
    FiniteGroup S3 = FiniteGroup::symmetric3();
    CHECK(S3.order() == 6);
    CHECK(!S3.abelian());
    CHECK(S3.commutator_subgroup_order() == 3);
    // conjugacy classes of sizes 1, 2, 3
    std::vector<size_t> sizes;
    for (auto& c : S3.conjugacy_classes()) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 2, 3});
    CHECK(S3.element_order(1) == 3);
    CHECK(S3.element_order(3) == 2);
}

TEST_CASE("group ring arithmetic") {
    std::mt19937_64 rng(17);
    FqField F = FqField::prime(3);
    for (auto G : {FiniteGroup::cyclic(4), FiniteGroup::symmetric3()}) {
        FqGroupRing GR(G, F);
        for (int it = 0; it < 50; ++it) {
            auto a = random_gr(rng, GR), b = random_gr(rng, GR), c = random_gr(rng, GR);
            CHECK(GR.equal(GR.mul(GR.mul(a, b), c), GR.mul(a, GR.mul(b, c))));
            CHECK(GR.equal(GR.mul(a, GR.add(b, c)), GR.add(GR.mul(a, b), GR.mul(a, c))));
            if (G.abelian()) CHECK(GR.equal(GR.mul(a, b), GR.mul(b, a)));
            CHECK(F.equal(GR.augment(GR.mul(a, b)), F.mul(GR.augment(a), GR.augment(b))));
        }
    }
}

TEST_CASE("local decomposition of abelian group algebras") {
    // F_2[C_2] is local with a 1-dimensional radical
    {
        FqField F = FqField::prime(2);
        auto B = StructAlgebra::group_ring(F, FiniteGroup::cyclic(2));
        auto D = local_decomposition(B);
        REQUIRE(D.size() == 1);
        CHECK(D.radical.size() == 1);
        CHECK(D.blocks[0].basis.size() == 2);
    }
    // F_3[C_2] ~ F_3 x F_3
    {
        FqField F = FqField::prime(3);
        auto B = StructAlgebra::group_ring(F, FiniteGroup::cyclic(2));
        auto D = local_decomposition(B);
        REQUIRE(D.size() == 2);
        CHECK(D.radical.empty());
        for (auto& blk : D.blocks) {
            CHECK(blk.basis.size() == 1);
            CHECK(blk.radical.empty());
        }
        // idempotents orthogonal and summing to 1
        auto e0 = D.blocks[0].idempotent, e1 = D.blocks[1].idempotent;
        CHECK(B.is_zero(B.mul(e0, e1)));
        CHECK(B.add(e0, e1) == B.one());
    }
    // F_2[C_3] ~ F_2 x F_4
    {
        FqField F = FqField::prime(2);
        auto B = StructAlgebra::group_ring(F, FiniteGroup::cyclic(3));
        auto D = local_decomposition(B);
        REQUIRE(D.size() == 2);
        std::vector<size_t> dims{D.blocks[0].basis.size(), D.blocks[1].basis.size()};
        std::sort(dims.begin(), dims.end());
        CHECK(dims == std::vector<size_t>{1, 2});
    }
    // F_2[C_2 x C_2]-like: C_4 over F_2 is local, radical dim 3
    {
        FqField F = FqField::prime(2);
        auto B = StructAlgebra::group_ring(F, FiniteGroup::cyclic(4));
        auto D = local_decomposition(B);
        REQUIRE(D.size() == 1);
        CHECK(D.radical.size() == 3);
    }
}

TEST_CASE("unit detection through local blocks") {
    FqField F = FqField::prime(2);
    FiniteGroup C2 = FiniteGroup::cyclic(2);
    auto B = StructAlgebra::group_ring(F, C2);
    auto D = local_decomposition(B);
    // units of F_2[C_2]: 1 and g; non-units: 0, 1+g
    CHECK(is_unit(B, D, FqVec{1, 0}));
    CHECK(is_unit(B, D, FqVec{0, 1}));
    CHECK(!is_unit(B, D, FqVec{0, 0}));
    CHECK(!is_unit(B, D, FqVec{1, 1}));
}

TEST_CASE("identity decomposition for abelian groups verifies") {
    FqField F = FqField::prime(2);
    FiniteGroup C2 = FiniteGroup::cyclic(2);
    auto D = Decomposition::abelian(F, C2);
    CHECK(D.verify().empty());
}

TEST_CASE("bundled F_2[S_3] decomposition verifies: dimensions 2 + 4 = 6") {
    FqField F = FqField::prime(2);
    FiniteGroup S3 = FiniteGroup::symmetric3();
    auto D = Decomposition::s3_f2(F, S3);
    auto bad = D.verify();
    for (auto& b : bad) MESSAGE(b);
    CHECK(bad.empty());
    REQUIRE(D.num_blocks() == 2);
    CHECK(D.blocks()[0].n * D.blocks()[0].n * D.blocks()[0].ring.dim() == 2);
    CHECK(D.blocks()[1].n * D.blocks()[1].n * D.blocks()[1].ring.dim() == 4);
}

TEST_CASE("nrd: abelian case reduces to the plain determinant") {
    std::mt19937_64 rng(23);
    FqField F = FqField::prime(3);
    FiniteGroup C2 = FiniteGroup::cyclic(2);
    FqGroupRing GR(C2, F);
    auto D = Decomposition::abelian(F, C2);
    for (int it = 0; it < 25; ++it) {
        size_t n = 1 + rng() % 3;
        RMatrix<FqGroupRing> M(GR, n, n);
        for (auto& v : M.a) v = random_gr(rng, GR);
        auto lhs = D.nrd(GR, M);
        auto rhs = berkowitz_det(GR, M);
        CHECK(GR.equal(lhs, rhs));
    }
}

TEST_CASE("nrd of a 3-cycle in F_2[S_3]: block images (1, det rho_2(g))") {
    FqField F = FqField::prime(2);
    FiniteGroup S3 = FiniteGroup::symmetric3();
    FqGroupRing GR(S3, F);
    auto D = Decomposition::s3_f2(F, S3);
    RMatrix<FqGroupRing> M(GR, 1, 1);
    M(0, 0) = GR.group_elem(1);  // a 3-cycle
    auto dets = D.block_dets(M);
    // block 1: image of r in F_2[C_2] is the identity coset
    CHECK(dets[0] == FqVec{1, 0});
    // block 2: det of the 2x2 image of r computed directly
    const auto& b2 = D.blocks()[1];
    auto img = D.block_image(1, M(0, 0));
    auto det_direct = berkowitz_det(b2.ring, img);
    CHECK(dets[1] == det_direct);
    // pull-back must be central
    auto nrd = D.nrd(GR, M);
    CHECK(GR.is_central(nrd));
}

TEST_CASE("nrd is multiplicative on random matrices over F_2[S_3]") {
    std::mt19937_64 rng(29);
    FqField F = FqField::prime(2);
    FiniteGroup S3 = FiniteGroup::symmetric3();
    FqGroupRing GR(S3, F);
    auto D = Decomposition::s3_f2(F, S3);
    for (int it = 0; it < 50; ++it) {
        size_t n = 1 + rng() % 2;
        RMatrix<FqGroupRing> A(GR, n, n), B(GR, n, n);
        for (auto& v : A.a) v = random_gr(rng, GR);
        for (auto& v : B.a) v = random_gr(rng, GR);
        auto prod = rmat_mul(GR, A, B);
        CHECK(GR.equal(D.nrd(GR, prod), GR.mul(D.nrd(GR, A), D.nrd(GR, B))));
    }
}

TEST_CASE("decomposition JSON round-trip") {
    FqField F = FqField::prime(2);
    FiniteGroup S3 = FiniteGroup::symmetric3();
    auto D = Decomposition::s3_f2(F, S3);
    auto text = decomposition_to_json(D);
    auto D2 = decomposition_from_json(F, S3, text);
    CHECK(D2.verify().empty());
    CHECK(decomposition_to_json(D2) == text);
}

TEST_CASE("catalog rejects uncataloged non-abelian group rings") {
    FqField F3 = FqField::prime(3);
    FiniteGroup S3 = FiniteGroup::symmetric3();
    CHECK_THROWS_AS(catalog_decomposition(F3, S3), HypothesisViolated);
}

TEST_CASE("hypothesis check: ell dividing |G'| is flagged") {
    // S3 over F_3: 3 divides |A_3| = 3
    FqField F3 = FqField::prime(3);
    FiniteGroup S3 = FiniteGroup::symmetric3();
    // a fake decomposition cannot even be assembled with correct dimensions;
    // use the abelianization block padded: simplest is to check verify() on a
    // wrong-field copy of the bundled data
    FiniteGroup C2 = FiniteGroup::cyclic(2);
    DecompBlock b1{1, StructAlgebra::group_ring(F3, C2), {}};
    for (uint16_t g = 0; g < 6; ++g) {
        RMatrix<StructAlgebra> m(b1.ring, 1, 1);
        FqVec v(2, 0);
        v[g / 3] = 1;
        m(0, 0) = v;
        b1.rho.push_back(std::move(m));
    }
    DecompBlock b2{2, StructAlgebra::base_field(F3), {}};
    for (uint16_t g = 0; g < 6; ++g)
        b2.rho.push_back(RMatrix<StructAlgebra>::identity(b2.ring, 2));
    Decomposition D(F3, S3, {std::move(b1), std::move(b2)});
    auto bad = D.verify();
    bool has_hyp = false;
    for (auto& s : bad)
        if (s.find("hypothesis") != std::string::npos) has_hyp = true;
    CHECK(has_hyp);
}
