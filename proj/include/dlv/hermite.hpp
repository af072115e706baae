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

#ifndef DLV_HERMITE_HPP
#define DLV_HERMITE_HPP

#include "dlv/fq_matrix.hpp"
#include "dlv/fq_poly.hpp"
#include "dlv/group_ring.hpp"
#include "dlv/rings.hpp"

namespace dlv {

using AVec = std::vector<FqPoly>;       // vector over A = F_q[t]
using AMatrixCols = std::vector<AVec>;  // list of columns

// Invariant factors f_1 | f_2 | ... of a finitely presented A-module.
// Entries are monic; the zero polynomial is the free-rank sentinel.
struct InvariantFactors {
    std::vector<FqPoly> factors;
    bool finite() const {
        for (auto& f : factors)
            if (f.is_zero()) return false;
        return true;
    }
    // log_q of the module order (sum of degrees); only for finite modules
    uint64_t dim_fq() const {
        uint64_t s = 0;
        for (auto& f : factors) s += uint64_t(f.degree());
        return s;
    }
};

// Invariant factors of coker(T : A^k -> A^m) for an m x k matrix given by
// columns; the result has m entries (trailing zeros = free rank).
InvariantFactors smith_invariants(const PolyRing& A, const AMatrixCols& cols, size_t m);

// Canonical column Hermite normal form of the A-submodule of A^m generated
// by the given columns: echelon columns with monic pivots in strictly
// increasing pivot rows, entries left of a pivot reduced to lower degree.
AMatrixCols hermite_normal_form(const PolyRing& A, AMatrixCols cols, size_t m);

// Membership of v in the module spanned by a Hermite basis.
bool hermite_member(const PolyRing& A, const AMatrixCols& hnf, const AVec& v);

// Basis of {x in A^k : M x = 0} for the m x k matrix with the given columns.
AMatrixCols kernel_lattice(const PolyRing& A, const AMatrixCols& cols, size_t m);

// The centre Z(A[G]): free A-module on the conjugacy-class sums. Central
// elements are coefficient vectors over A in the class-sum basis.
class CentralStructure {
   public:
    CentralStructure(const FqField& F, const FiniteGroup& G);

    const FqField& field() const { return *F_; }
    const FiniteGroup& group() const { return *G_; }
    const PolyRing& poly_ring() const { return A_; }
    size_t rank() const { return classes_.size(); }

    // class-sum basis multiplication: z_i * z_j in class-sum coordinates
    const FqVec& basis_product(size_t i, size_t j) const { return mul_[i * rank() + j]; }

    AVec zero() const { return AVec(rank()); }
    AVec one() const;
    AVec add(const AVec& a, const AVec& b) const;
    AVec mul(const AVec& a, const AVec& b) const;
    AVec mul_poly(const AVec& a, const FqPoly& p) const;
    bool is_zero(const AVec& a) const;
    bool equal(const AVec& a, const AVec& b) const;

    // conversions with group-ring form: central element of A[G] given as a
    // polynomial with F_q[G] coefficients
    using GrPoly = PolyRingOf<FqGroupRing>::Elem;
    AVec from_group_poly(const FqGroupRing& GR, const GrPoly& x) const;
    GrPoly to_group_poly(const FqGroupRing& GR, const AVec& a) const;

    std::string to_string(const AVec& a) const;

   private:
    const FqField* F_;
    const FiniteGroup* G_;
    PolyRing A_;
    std::vector<std::vector<uint16_t>> classes_;
    std::vector<uint16_t> class_of_;  // element id -> class index
    std::vector<FqVec> mul_;
};

// An ideal of Z(A[G]) in canonical Hermite form over A.
struct CentralIdeal {
    AMatrixCols hnf;  // columns over A^rank, canonical

    bool operator==(const CentralIdeal& o) const { return hnf == o.hnf; }
    bool is_zero() const { return hnf.empty(); }
};

// Ideal generated by central elements: closes the A-span under class-sum
// multiplication, then puts it in Hermite form.
CentralIdeal central_ideal(const CentralStructure& Z, const std::vector<AVec>& gens);

bool ideal_member(const CentralStructure& Z, const CentralIdeal& I, const AVec& x);
bool ideal_contains(const CentralStructure& Z, const CentralIdeal& I, const CentralIdeal& J);
bool ideal_equal(const CentralStructure& Z, const CentralIdeal& I, const CentralIdeal& J);
CentralIdeal ideal_product(const CentralStructure& Z, const CentralIdeal& I,
                           const CentralIdeal& J);

}  // namespace dlv

#endif
