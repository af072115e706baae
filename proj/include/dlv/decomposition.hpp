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

#ifndef DLV_DECOMPOSITION_HPP
#define DLV_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "dlv/algebra.hpp"
#include "dlv/group_ring.hpp"

namespace dlv {

// One block of an isomorphism F_q[G] ~ (+) M_{n_i}(R_i) onto matrix rings
// over commutative algebras: the block size, the coefficient ring, and the
// image of every group element.
struct DecompBlock {
    size_t n;                                // matrix size
    StructAlgebra ring;                      // commutative R_i
    std::vector<RMatrix<StructAlgebra>> rho;  // image of each group element
};

// A verified decomposition of F_q[G]. Extends coefficientwise to A[G],
// F_inf[G] and F_q[G][Z]/Z^N.
class Decomposition {
   public:
    Decomposition(const FqField& F, const FiniteGroup& G, std::vector<DecompBlock> blocks);

    // The identity decomposition (single 1x1 block, R = F_q[G]) for abelian G.
    static Decomposition abelian(const FqField& F, const FiniteGroup& G);
    // The bundled F_2[S_3] ~ F_2[C_2] (+) M_2(F_2) decomposition.
    static Decomposition s3_f2(const FqField& F2, const FiniteGroup& S3);

    const FqField& field() const { return *F_; }
    const FiniteGroup& group() const { return *G_; }
    const std::vector<DecompBlock>& blocks() const { return blocks_; }
    size_t num_blocks() const { return blocks_.size(); }

    // Checks unitality, multiplicativity on all Cayley pairs, bijectivity
    // (F_q-dimension count + invertibility of the linear map) and the
    // ell | |G'| hypothesis. Returns the violations (empty = verified).
    std::vector<std::string> verify() const;
    bool verified() const { return verified_; }
    void require_verified() const;

    // image of an F_q[G] element in block i
    RMatrix<StructAlgebra> block_image(size_t i, const FqGroupRing::Elem& x) const;

    // central element of F_q[G] whose block images are the given scalars
    FqGroupRing::Elem central_from_blocks(const FqGroupRing& GR,
                                          const std::vector<StructAlgebra::Elem>& scalars) const;

    // Reduced determinant of a square matrix over F_q[G]: blockwise
    // determinant pulled back to the centre.
    FqGroupRing::Elem nrd(const FqGroupRing& GR, const RMatrix<FqGroupRing>& M) const;

    // Blockwise determinants of a square matrix over F_q[G] as raw tuples
    // (one commutative determinant per block), without pulling back.
    std::vector<StructAlgebra::Elem> block_dets(const RMatrix<FqGroupRing>& M) const;

   private:
    const FqField* F_;
    const FiniteGroup* G_;
    std::vector<DecompBlock> blocks_;
    FqMatrix flat_;      // the linear map F_q[G] -> (+) M_{n_i}(R_i), |G| x |G|
    FqMatrix flat_inv_;
    bool verified_ = false;

    void build_flat();
    FqVec flatten_blocks(const std::vector<RMatrix<StructAlgebra>>& imgs) const;
};

// Catalog lookup: identity decomposition for abelian groups, the bundled
// S3/F_2 entry, otherwise throws HypothesisViolated.
Decomposition catalog_decomposition(const FqField& F, const FiniteGroup& G);

// Structured-text (JSON) serialization of a decomposition.
std::string decomposition_to_json(const Decomposition& D);
Decomposition decomposition_from_json(const FqField& F, const FiniteGroup& G,
                                      const std::string& json_text);

}  // namespace dlv

#endif
