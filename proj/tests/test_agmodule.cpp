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

#include "dlv/fitting.hpp"

using namespace dlv;

namespace {

// the regular module F_q[G]^r with a chosen F_q[G]-matrix as t-action,
// conjugated by a random invertible F_q-matrix commuting with nothing
FiniteAGModule free_module(const FqField& F, const FiniteGroup& G, const FqGroupRing& GR,
                           const RMatrix<FqGroupRing>& T) {
    size_t r = T.rows;
    uint32_t n = G.order();
    FiniteAGModule M;
    M.F = &F;
    M.G = &G;
    M.dim = r * n;
    // basis (j, g) = g * e_j ; G acts by left translation on each factor
    M.g_act.assign(n, FqMatrix(F, M.dim, M.dim));
    for (uint16_t g = 0; g < n; ++g)
        for (size_t j = 0; j < r; ++j)
            for (uint16_t h = 0; h < n; ++h)
                M.g_act[g](j * n + G.op(g, h), j * n + h) = F.one();
    // t acts by the group-ring matrix T: t(e_j) = sum_i T_ij e_i
    M.t_act = FqMatrix(F, M.dim, M.dim);
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < r; ++i)
            for (uint16_t g = 0; g < n; ++g)
                if (T(i, j).c[g] != 0) {
                    // T_ij = sum_g c_g g: t(h e_j) = h * T_ij e_i = sum c_g (h g) e_i
                    for (uint16_t h = 0; h < n; ++h)
                        M.t_act(i * n + G.op(h, g), j * n + h) =
                            F.add(M.t_act(i * n + G.op(h, g), j * n + h), T(i, j).c[g]);
                }
    M.validate();
    return M;
}

FqGroupRing::Elem rand_gr(std::mt19937_64& rng, const FqGroupRing& GR) {
    auto e = GR.make();
    for (auto& v : e.c) v = FqField::Elem(rng() % GR.base().q());
    return e;
}

FiniteAGModule scramble(const FiniteAGModule& M, std::mt19937_64& rng) {
    const FqField& F = *M.F;
    FqMatrix S(F, M.dim, M.dim);
    std::optional<FqMatrix> Sinv;
    do {
        for (size_t i = 0; i < M.dim; ++i)
            for (size_t j = 0; j < M.dim; ++j) S(i, j) = FqField::Elem(rng() % F.q());
        Sinv = S.inverse();
    } while (!Sinv);
    FiniteAGModule out = M;
    out.t_act = S * M.t_act * *Sinv;
    for (uint16_t g = 0; g < M.G->order(); ++g) out.g_act[g] = S * M.g_act[g] * *Sinv;
    out.free_basis.reset();
    return out;
}

}  // namespace

TEST_CASE("ct_free_basis: the regular module has basis {1}") {
    FqField F = FqField::prime(2);
    for (auto G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()}) {
        FqGroupRing GR(G, F);
        RMatrix<FqGroupRing> T(GR, 1, 1);
        T(0, 0) = GR.zero();
        auto M = free_module(F, G, GR, T);
        auto basis = ct_free_basis(M);
        CHECK(verify_free_basis(M, basis));
    }
}

TEST_CASE("ct_free_basis: dimension not divisible by |G| fails fast") {
    FqField F = FqField::prime(2);
    FiniteGroup C2 = FiniteGroup::cyclic(2);
    FiniteAGModule M;
    M.F = &F;
    M.G = &C2;
    M.dim = 1;
    M.t_act = FqMatrix(F, 1, 1);
    M.g_act = {FqMatrix::identity(F, 1), FqMatrix::identity(F, 1)};
    CHECK_THROWS_AS(ct_free_basis(M), NotFree);
}

TEST_CASE("ct_free_basis: scrambled free rank-2 module over F_2[C_2] is found free") {
    std::mt19937_64 rng(99);
    FqField F = FqField::prime(2);
    FiniteGroup C2 = FiniteGroup::cyclic(2);
    FqGroupRing GR(C2, F);
    for (int it = 0; it < 20; ++it) {
        RMatrix<FqGroupRing> T(GR, 2, 2);
        for (auto& v : T.a) v = rand_gr(rng, GR);
        auto M = scramble(free_module(F, C2, GR, T), rng);
        auto basis = ct_free_basis(M);
        CHECK(verify_free_basis(M, basis));
        // change-of-basis matrix invertible (asserted directly per the spec)
        CHECK(free_basis_matrix(M, basis).inverse().has_value());
    }
}

TEST_CASE("ct_free_basis: trivial module over F_2[C_2] rejected with certificate") {
    FqField F = FqField::prime(2);
    FiniteGroup C2 = FiniteGroup::cyclic(2);
    FiniteAGModule M;
    M.F = &F;
    M.G = &C2;
    M.dim = 2;
    M.t_act = FqMatrix(F, 2, 2);
    M.g_act = {FqMatrix::identity(F, 2), FqMatrix::identity(F, 2)};
    M.validate();
    CHECK_THROWS_AS(ct_free_basis(M), NotFree);
    // the Tate certificate is informative
    CHECK(tate_h0_dim(M, 1) == 2);
}

TEST_CASE("semisimple non-free projective is rejected (block multiplicities)") {
    // F_3[C_2]-module: trivial + trivial (never free, though projective)
    FqField F = FqField::prime(3);
    FiniteGroup C2 = FiniteGroup::cyclic(2);
    FiniteAGModule M;
    M.F = &F;
    M.G = &C2;
    M.dim = 2;
    M.t_act = FqMatrix(F, 2, 2);
    M.g_act = {FqMatrix::identity(F, 2), FqMatrix::identity(F, 2)};
    M.validate();
    CHECK_THROWS_AS(ct_free_basis(M), NotFree);
}

TEST_CASE("invariant factors of modules") {
    FqField F = FqField::prime(2);
    FiniteGroup G1 = FiniteGroup::trivial();
    // A/(t^2+t+1): companion matrix
    FiniteAGModule M;
    M.F = &F;
    M.G = &G1;
    M.dim = 2;
    M.t_act = FqMatrix(F, 2, 2);
    M.t_act(0, 1) = 1;
    M.t_act(1, 0) = 1;
    M.t_act(1, 1) = 1;
    M.g_act = {FqMatrix::identity(F, 2)};
    auto inv = M.invariant_factors();
    REQUIRE(inv.factors.size() == 1);
    CHECK(inv.factors[0] == FqPoly({1, 1, 1}));
    CHECK(inv.dim_fq() == 2);
}

TEST_CASE("fitting ideal: spec cases") {
    FqField F = FqField::prime(2);
    // trivial G, P = [f] -> (f)
    {
        FiniteGroup G1 = FiniteGroup::trivial();
        FqGroupRing GR(G1, F);
        CentralStructure Z(F, G1);
        auto D = Decomposition::abelian(F, G1);
        AGPolyRing P(GR);
        FqPoly f({1, 1, 1});
        AGMatrix Pm(P, 1, 1);
        // f as polynomial with group-ring coefficients
        AGPoly fe = P.zero();
        fe.c.assign(3, GR.zero());
        for (size_t k = 0; k <= 2; ++k) fe.c[k] = GR.from_base(f.coeff(k));
        Pm(0, 0) = P.trim(std::move(fe));
        auto I = fitting_ideal(Z, GR, D, Pm);
        auto expect = central_ideal(Z, {AVec{f}});
        CHECK(ideal_equal(Z, I, expect));
    }
    // C_2 over F_2, P = diag(t, t+g) -> (t(t+g))
    {
        FiniteGroup C2 = FiniteGroup::cyclic(2);
        FqGroupRing GR(C2, F);
        CentralStructure Z(F, C2);
        auto D = Decomposition::abelian(F, C2);
        AGPolyRing P(GR);
        AGMatrix Pm(P, 2, 2);
        Pm(0, 0) = P.t_power(1, GR.one());
        Pm(1, 1) = P.add(P.t_power(1, GR.one()), P.constant(GR.group_elem(1)));
        Pm(0, 1) = P.zero();
        Pm(1, 0) = P.zero();
        auto I = fitting_ideal(Z, GR, D, Pm);
        auto gen = Z.from_group_poly(GR, P.mul(Pm(0, 0), Pm(1, 1)));
        CHECK(ideal_equal(Z, I, principal_central_ideal(Z, gen)));
    }
    // identity presentation -> unit ideal
    {
        FiniteGroup C2 = FiniteGroup::cyclic(2);
        FqGroupRing GR(C2, F);
        CentralStructure Z(F, C2);
        auto D = Decomposition::abelian(F, C2);
        AGPolyRing P(GR);
        AGMatrix Pm(P, 2, 2);
        Pm(0, 0) = Pm(1, 1) = P.one();
        auto I = fitting_ideal(Z, GR, D, Pm);
        CHECK(ideal_member(Z, I, Z.one()));
    }
}

TEST_CASE("Fitting ideal of a free-basis presentation is principal (random, abelian)") {
    std::mt19937_64 rng(123);
    for (uint32_t q : {2u, 3u}) {
        FqField F = FqField::prime(q);
        for (auto G : {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}) {
            FqGroupRing GR(G, F);
            CentralStructure Z(F, G);
            auto D = Decomposition::abelian(F, G);
            for (int it = 0; it < 10; ++it) {
                size_t r = 1 + rng() % 2;
                RMatrix<FqGroupRing> T(GR, r, r);
                for (auto& v : T.a) v = rand_gr(rng, GR);
                auto M = scramble(free_module(F, G, GR, T), rng);
                M.free_basis = ct_free_basis(M, 7 + it);
                auto P = char_presentation(GR, M);
                auto I = fitting_ideal(Z, GR, D, P);
                auto det = nrd_poly_matrix(Z, GR, D, P);
                CHECK(ideal_equal(Z, I, principal_central_ideal(Z, det)));
            }
        }
    }
}

TEST_CASE("Fitting ideal via 43.4 presentation: trivial G cross-check with Smith") {
    std::mt19937_64 rng(321);
    FqField F = FqField::prime(2);
    FiniteGroup G1 = FiniteGroup::trivial();
    FqGroupRing GR(G1, F);
    CentralStructure Z(F, G1);
    auto D = Decomposition::abelian(F, G1);
    PolyRing A(F);
    for (int it = 0; it < 20; ++it) {
        size_t d = 1 + rng() % 4;
        FiniteAGModule M;
        M.F = &F;
        M.G = &G1;
        M.dim = d;
        M.t_act = FqMatrix(F, d, d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) M.t_act(i, j) = FqField::Elem(rng() % 2);
        M.g_act = {FqMatrix::identity(F, d)};
        M.free_basis = ct_free_basis(M);
        auto P = char_presentation(GR, M);
        auto I = fitting_ideal(Z, GR, D, P);
        // the Fitting ideal over A is generated by the product of the
        // invariant factors (the characteristic polynomial of T)
        auto inv = M.invariant_factors();
        FqPoly prod = FqPoly::constant(1);
        for (auto& f : inv.factors) prod = A.mul(prod, f);
        CHECK(ideal_equal(Z, I, principal_central_ideal(Z, AVec{prod})));
    }
}

TEST_CASE("annihilator ideal: trivial G gives the minimal polynomial") {
    std::mt19937_64 rng(77);
    FqField F = FqField::prime(2);
    FiniteGroup G1 = FiniteGroup::trivial();
    CentralStructure Z(F, G1);
    PolyRing A(F);
    for (int it = 0; it < 15; ++it) {
        size_t d = 1 + rng() % 3;
        FiniteAGModule M;
        M.F = &F;
        M.G = &G1;
        M.dim = d;
        M.t_act = FqMatrix(F, d, d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) M.t_act(i, j) = FqField::Elem(rng() % 2);
        M.g_act = {FqMatrix::identity(F, d)};
        auto Ann = annihilator_ideal(Z, M);
        // minimal polynomial by brute force: lowest-degree monic p with p(T)=0
        FqPoly mp;
        for (int deg = 1; deg <= int(d) && mp.is_zero(); ++deg) {
            for (auto& cand : enumerate_monic(F, deg)) {
                if (M.poly_action(cand).is_zero()) {
                    mp = cand;
                    break;
                }
            }
        }
        REQUIRE(!mp.is_zero());
        CHECK(ideal_equal(Z, Ann, principal_central_ideal(Z, AVec{mp})));
    }
}

TEST_CASE("module_presentation reproduces the Fitting ideal of a free module") {
    std::mt19937_64 rng(11);
    FqField F = FqField::prime(2);
    FiniteGroup C2 = FiniteGroup::cyclic(2);
    FqGroupRing GR(C2, F);
    CentralStructure Z(F, C2);
    auto D = Decomposition::abelian(F, C2);
    for (int it = 0; it < 10; ++it) {
        RMatrix<FqGroupRing> T(GR, 1, 1);
        T(0, 0) = rand_gr(rng, GR);
        auto M = scramble(free_module(F, C2, GR, T), rng);
        auto P2 = module_presentation(GR, M);
        auto I2 = fitting_ideal(Z, GR, D, P2);
        auto Mf = M;
        Mf.free_basis = ct_free_basis(Mf);
        auto I1 = fitting_ideal(Z, GR, D, char_presentation(GR, Mf));
        CHECK(ideal_equal(Z, I1, I2));
    }
}
