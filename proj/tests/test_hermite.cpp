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

#include "dlv/hermite.hpp"

using namespace dlv;

namespace {

FqPoly rand_poly(std::mt19937_64& rng, const FqField& F, int maxdeg) {
    int d = int(rng() % (maxdeg + 1));
    std::vector<uint16_t> c(size_t(d) + 1);
    for (auto& x : c) x = uint16_t(rng() % F.q());
    return FqPoly(std::move(c));
}

}  // namespace

TEST_CASE("smith invariants: spec cases") {
    FqField F = FqField::prime(2);
    PolyRing A(F);
    const FqPoly t = FqPoly::t_power(1);
    const FqPoly one = FqPoly::constant(1);

    // diag(1, t) -> (1, t)
    {
        AMatrixCols cols{{one, FqPoly::zero()}, {FqPoly::zero(), t}};
        auto inv = smith_invariants(A, cols, 2);
        REQUIRE(inv.factors.size() == 2);
        CHECK(inv.factors[0] == one);
        CHECK(inv.factors[1] == t);
    }
    // [[t, 1], [0, t]] -> (1, t^2): d1 = gcd of entries = 1, d2 = det = t^2
    {
        AMatrixCols cols{{t, FqPoly::zero()}, {one, t}};
        auto inv = smith_invariants(A, cols, 2);
        REQUIRE(inv.factors.size() == 2);
        CHECK(inv.factors[0] == one);
        CHECK(inv.factors[1] == A.mul(t, t));
    }
    // zero 1x1 -> (0): cokernel is A itself
    {
        AMatrixCols cols{{FqPoly::zero()}};
        auto inv = smith_invariants(A, cols, 1);
        REQUIRE(inv.factors.size() == 1);
        CHECK(inv.factors[0].is_zero());
        CHECK(!inv.finite());
    }
}

TEST_CASE("smith of diag(f, g) gives gcd and lcm") {
    std::mt19937_64 rng(55);
    for (uint32_t q : {2u, 3u}) {
        FqField F = FqField::prime(q);
        PolyRing A(F);
        for (int it = 0; it < 60; ++it) {
            FqPoly f = rand_poly(rng, F, 6), g = rand_poly(rng, F, 6);
            if (f.is_zero() || g.is_zero()) continue;
            AMatrixCols cols{{f, FqPoly::zero()}, {FqPoly::zero(), g}};
            auto inv = smith_invariants(A, cols, 2);
            CHECK(inv.factors[0] == A.gcd(f, g));
            CHECK(inv.factors[1] == A.lcm(f, g));
        }
    }
}

TEST_CASE("smith vs gcd-of-minors oracle on random matrices") {
    std::mt19937_64 rng(56);
    FqField F = FqField::prime(3);
    PolyRing A(F);
    for (int it = 0; it < 30; ++it) {
        size_t n = 2 + rng() % 2;
        AMatrixCols cols(n, AVec(n));
        for (auto& c : cols)
            for (auto& e : c) e = rand_poly(rng, F, 2);
        auto inv = smith_invariants(A, cols, n);
        // d_k = gcd of k x k minors; invariant factor f_k = d_k / d_{k-1}
        PolyRingOf<PolyRing> dummy(A);
        RMatrix<PolyRing> M(A, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) M(i, j) = cols[j][i];
        // k = 1: gcd of entries
        FqPoly d1 = FqPoly::zero();
        for (auto& c : cols)
            for (auto& e : c) d1 = A.gcd(d1, e);
        // k = n: determinant
        FqPoly dn = A.monic(berkowitz_det(A, M));
        if (!d1.is_zero()) CHECK(inv.factors[0] == d1);
        FqPoly prod = FqPoly::constant(1);
        bool all_nonzero = true;
        for (auto& f : inv.factors) {
            if (f.is_zero()) all_nonzero = false;
            else prod = A.mul(prod, f);
        }
        if (all_nonzero) CHECK(A.monic(prod) == dn);
    }
}

TEST_CASE("hermite form: canonical, membership, kernel") {
    std::mt19937_64 rng(57);
    FqField F = FqField::prime(2);
    PolyRing A(F);
    for (int it = 0; it < 40; ++it) {
        size_t m = 2 + rng() % 2, k = 1 + rng() % 4;
        AMatrixCols cols(k, AVec(m));
        for (auto& c : cols)
            for (auto& e : c) e = rand_poly(rng, F, 3);
        auto H = hermite_normal_form(A, cols, m);
        // every original column is a member
        for (auto& c : cols) CHECK(hermite_member(A, H, c));
        // members: random A-combinations of the columns
        AVec v(m, FqPoly::zero());
        for (auto& c : cols) {
            FqPoly a = rand_poly(rng, F, 2);
            for (size_t i = 0; i < m; ++i) v[i] = A.add(v[i], A.mul(a, c[i]));
        }
        CHECK(hermite_member(A, H, v));
        // canonical: HNF of the HNF is itself
        CHECK(hermite_normal_form(A, H, m) == H);
        // kernel columns really annihilate
        auto K = kernel_lattice(A, cols, m);
        for (auto& kv : K) {
            AVec img(m, FqPoly::zero());
            for (size_t j = 0; j < k; ++j)
                for (size_t i = 0; i < m; ++i) img[i] = A.add(img[i], A.mul(kv[j], cols[j][i]));
            for (auto& e : img) CHECK(e.is_zero());
        }
    }
}

TEST_CASE("ideal membership agrees with brute-force linear-combination search") {
    // For ideals over A (trivial group), x in (g1, ..., gk) iff the linear
    // system sum a_i g_i = x has a solution with deg a_i bounded; enumerate
    // by solving an F_q-linear system in the coefficients.
    std::mt19937_64 rng(58);
    FqField F = FqField::prime(2);
    PolyRing A(F);
    FiniteGroup G1 = FiniteGroup::trivial();
    CentralStructure Z(F, G1);
    for (int it = 0; it < 25; ++it) {
        std::vector<AVec> gens;
        size_t k = 1 + rng() % 2;
        for (size_t i = 0; i < k; ++i) gens.push_back(AVec{rand_poly(rng, F, 4)});
        auto I = central_ideal(Z, gens);
        FqPoly x = rand_poly(rng, F, 6);
        bool member = ideal_member(Z, I, AVec{x});
        // brute force over coefficient space: deg a_i <= 8
        const int D = 8;
        size_t vars = k * (D + 1);
        // build linear system: columns = t^j * g_i coefficient vectors up to degree 14
        const int outdim = 15;
        FqMatrix Mx(F, outdim, vars);
        size_t col = 0;
        for (size_t i = 0; i < k; ++i)
            for (int j = 0; j <= D; ++j, ++col) {
                FqPoly p = A.mul(FqPoly::t_power(size_t(j)), gens[i][0]);
                for (int d = 0; d < outdim; ++d) Mx(size_t(d), col) = p.coeff(size_t(d));
            }
        FqVec b(outdim, 0);
        for (int d = 0; d < outdim; ++d) b[size_t(d)] = x.coeff(size_t(d));
        bool brute = Mx.solve(b).has_value();
        CHECK(member == brute);
    }
}

TEST_CASE("ideal arithmetic: spec cases") {
    FqField F = FqField::prime(3);
    FiniteGroup G1 = FiniteGroup::trivial();
    CentralStructure Z(F, G1);
    PolyRing A(F);
    const FqPoly t = FqPoly::t_power(1);

    // 0 is in any ideal
    auto I = central_ideal(Z, {AVec{t}});
    CHECK(ideal_member(Z, I, AVec{FqPoly::zero()}));
    // (t) = (c t) for units c
    auto J = central_ideal(Z, {AVec{A.mul_scalar(t, 2)}});
    CHECK(ideal_equal(Z, I, J));
    // (t)*(t+1) = (t^2 + t)
    auto K1 = central_ideal(Z, {AVec{FqPoly({1, 1})}});
    auto prod = ideal_product(Z, I, K1);
    auto expect = central_ideal(Z, {AVec{FqPoly({0, 1, 1})}});
    CHECK(ideal_equal(Z, prod, expect));
}

TEST_CASE("central structure of a non-abelian group ring") {
    FqField F = FqField::prime(2);
    FiniteGroup S3 = FiniteGroup::symmetric3();
    CentralStructure Z(F, S3);
    CHECK(Z.rank() == 3);  // three conjugacy classes
    // class sums are central in F_2[S_3]
    FqGroupRing GR(S3, F);
    for (size_t c = 0; c < Z.rank(); ++c) {
        AVec v = Z.zero();
        v[c] = Z.poly_ring().one();
        auto gp = Z.to_group_poly(GR, v);
        REQUIRE(gp.c.size() == 1);
        CHECK(GR.is_central(gp.c[0]));
    }
    // multiplication closes: product of class sums is central with the table
    AVec a = Z.zero(), b = Z.zero();
    a[1] = Z.poly_ring().one();
    b[2] = Z.poly_ring().one();
    auto ab = Z.mul(a, b);
    auto gp = Z.to_group_poly(GR, ab);
    if (!gp.c.empty()) CHECK(GR.is_central(gp.c[0]));
}
