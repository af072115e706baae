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

#ifndef DLV_AGMODULE_HPP
#define DLV_AGMODULE_HPP

#include <optional>

#include "dlv/algebra.hpp"
#include "dlv/group_ring.hpp"
#include "dlv/hermite.hpp"

namespace dlv {

// A finite A[G]-module: an F_q-space with a t-action, a G-action, and
// optionally the q-power Frobenius of an underlying ring structure.
struct FiniteAGModule {
    const FqField* F = nullptr;
    const FiniteGroup* G = nullptr;
    size_t dim = 0;
    FqMatrix t_act;
    std::vector<FqMatrix> g_act;        // indexed by group element id
    std::optional<FqMatrix> frob;       // q-power map, when a ring carrier exists
    std::optional<std::vector<FqVec>> free_basis;  // from ct_free_basis

    // t_act commutes with every g_act; g_act realizes the Cayley table;
    // frob commutes with the G-action. Throws on violation.
    void validate() const;

    // action matrix of an A-polynomial through t_act
    FqMatrix poly_action(const FqPoly& p) const;
    // action matrix of an F_q[G]-element
    FqMatrix group_ring_action(const FqGroupRing::Elem& x) const;

    // invariant factors of the underlying finite A-module (Smith form of tI - T)
    InvariantFactors invariant_factors() const;
};

// dim of the Tate cohomology group H^0(C, M) = M^C / N_C M for the cyclic
// subgroup generated by g.
size_t tate_h0_dim(const FiniteAGModule& M, uint16_t g);

// Searches for elements m_1..m_r with {g m_j} an F_q-basis: a deterministic
// block-lifting pass for abelian G, then a seeded randomized search, then
// Tate-cohomology / block-multiplicity certificates on failure.
std::vector<FqVec> ct_free_basis(const FiniteAGModule& M, uint64_t seed = 1);

// Is {g m_j} an F_q-basis? (the verification step of ct_free_basis)
bool verify_free_basis(const FiniteAGModule& M, const std::vector<FqVec>& basis);

// Change-of-basis matrix whose columns are g * m_j, ordered j-major then g.
FqMatrix free_basis_matrix(const FiniteAGModule& M, const std::vector<FqVec>& basis);

// Matrix over F_q[G] of an F_q[G]-linear endomorphism in the free basis:
// act(m_j) = sum_i a_{ij} m_i with a_{ij} in F_q[G].
RMatrix<FqGroupRing> action_over_group_ring(const FqGroupRing& GR, const FiniteAGModule& M,
                                            const FqMatrix& act);

}  // namespace dlv

#endif
