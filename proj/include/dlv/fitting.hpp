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

#ifndef DLV_FITTING_HPP
#define DLV_FITTING_HPP

#include "dlv/agmodule.hpp"
#include "dlv/decomposition.hpp"
#include "dlv/hermite.hpp"

namespace dlv {

// Matrices over A[G], written as polynomials in t with F_q[G] coefficients.
using AGPolyRing = PolyRingOf<FqGroupRing>;
using AGPoly = AGPolyRing::Elem;
using AGMatrix = RMatrix<AGPolyRing>;

// Fitting ideal of the module presented by the b x a matrix P over A[G]
// (columns are relations among b generators). Abelian groups take the ideal
// of all maximal minors; otherwise the ideal is assembled blockwise through
// the decomposition. Returned in canonical Hermite form over Z(A[G]).
CentralIdeal fitting_ideal(const CentralStructure& Z, const FqGroupRing& GR,
                           const Decomposition& D, const AGMatrix& P);

// The principal central ideal generated by one central element.
CentralIdeal principal_central_ideal(const CentralStructure& Z, const AVec& gen);

// Blockwise reduced determinant of a square matrix over A[G], as a central
// element in class-sum coordinates. For abelian G this is the plain
// determinant.
AVec nrd_poly_matrix(const CentralStructure& Z, const FqGroupRing& GR, const Decomposition& D,
                     const AGMatrix& M);

// The square presentation matrix t*I - T of a finite module with a free
// basis (T = t-action over F_q[G] in that basis).
AGMatrix char_presentation(const FqGroupRing& GR, const FiniteAGModule& M);

// Annihilator of M in Z(A[G]): all central z with z.M = 0, in Hermite form.
CentralIdeal annihilator_ideal(const CentralStructure& Z, const FiniteAGModule& M);

// An A[G]-presentation of a finite module that need not be free: generators
// are a set of F_q[G]-module generators, relations combine the t-action with
// the F_q[G]-syzygies of the generators.
AGMatrix module_presentation(const FqGroupRing& GR, const FiniteAGModule& M);

}  // namespace dlv

#endif
