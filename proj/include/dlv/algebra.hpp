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

#ifndef DLV_ALGEBRA_HPP
#define DLV_ALGEBRA_HPP

#include <optional>

#include "dlv/fq_matrix.hpp"
#include "dlv/group_ring.hpp"

namespace dlv {

// A finite-dimensional commutative F_q-algebra given by structure constants.
// Elements are F_q coordinate vectors in the defining basis.
class StructAlgebra {
   public:
    using Elem = FqVec;

    StructAlgebra(const FqField& F, size_t dim, std::vector<FqVec> mul_table, FqVec one);

    // F_q[G] for abelian G in the group-element basis.
    static StructAlgebra group_ring(const FqField& F, const FiniteGroup& G);
    // The field itself as a 1-dimensional algebra.
    static StructAlgebra base_field(const FqField& F);

    const FqField& field() const { return *F_; }
    size_t dim() const { return dim_; }
    const FqVec& basis_product(size_t i, size_t j) const { return mul_[i * dim_ + j]; }

    Elem zero() const { return FqVec(dim_, 0); }
    Elem one() const { return one_; }
    bool is_zero(const Elem& a) const { return vec_is_zero(a); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return vec_add(*F_, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return vec_sub(*F_, a, b); }
    Elem neg(const Elem& a) const { return vec_sub(*F_, zero(), a); }
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_scalar(const Elem& a, FqField::Elem c) const { return vec_scale(*F_, a, c); }
    Elem pow(Elem a, uint64_t n) const;

    // matrix of multiplication by a in the defining basis
    FqMatrix mult_matrix(const Elem& a) const;

    // inverse, if a is a unit
    std::optional<Elem> inv(const Elem& a) const;

    // checks: unital, associative on basis triples, commutative
    void verify() const;

   private:
    const FqField* F_;
    size_t dim_;
    std::vector<FqVec> mul_;  // basis_product(i,j), dim*dim entries
    FqVec one_;
};

// Decomposition of a commutative F_q-algebra into local blocks
// B = e_1 B x ... x e_m B (orthogonal primitive idempotents e_i).
struct LocalBlock {
    FqVec idempotent;               // e_i in B-coordinates
    std::vector<FqVec> basis;       // basis of e_i B in B-coordinates
    FqMatrix basis_mat;             // columns = basis (dim_B x dim_i)
    StructAlgebra ring;             // e_i B in its own basis
    std::vector<FqVec> radical;     // basis of the radical of e_i B (block coords)
    FqMatrix to_block;              // dim_i x dim_B projection: B -> e_iB coords
};

struct LocalDecomposition {
    std::vector<LocalBlock> blocks;
    std::vector<FqVec> radical;  // radical of B itself, B-coordinates

    size_t size() const { return blocks.size(); }
};

// Computes the block decomposition of a commutative algebra: radical via
// iterated ell-power maps (computed over the prime field), primitive
// idempotents of the semisimple quotient via minimal-polynomial splitting,
// then idempotent lifting along the radical. Deterministic given the seed.
LocalDecomposition local_decomposition(const StructAlgebra& B, uint64_t seed = 1);

// Unit test in a local-block sense: x is a unit of B iff its image in every
// block is nonzero modulo that block's radical.
bool is_unit(const StructAlgebra& B, const LocalDecomposition& D, const FqVec& x);

}  // namespace dlv

#endif
