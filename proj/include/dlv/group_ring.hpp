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

#ifndef DLV_GROUP_RING_HPP
#define DLV_GROUP_RING_HPP

#include <string>

#include "dlv/fq.hpp"
#include "dlv/group.hpp"
#include "dlv/rings.hpp"

namespace dlv {

// The group ring R0[G] with coefficients in a base ring. Multiplication is
// through the Cayley table, so this models the Ring concept honestly only
// when G is abelian; the non-abelian case is handled through matrix-ring
// decompositions, never through generic commutative algorithms.
template <Ring R0>
class GroupRingOf {
   public:
    using Base = R0;
    struct Elem {
        std::vector<typename R0::Elem> c;  // indexed by group element id
        bool operator==(const Elem&) const = default;
    };

    GroupRingOf(const FiniteGroup& G, const R0& base) : g_(&G), b_(&base) {}

    const FiniteGroup& group() const { return *g_; }
    const R0& base() const { return *b_; }
    bool commutative() const { return g_->abelian(); }

    Elem make() const {
        Elem e;
        e.c.assign(g_->order(), b_->zero());
        return e;
    }
    Elem zero() const { return make(); }
    Elem one() const {
        Elem e = make();
        e.c[0] = b_->one();
        return e;
    }
    Elem group_elem(uint16_t g) const {
        Elem e = make();
        e.c[g] = b_->one();
        return e;
    }
    Elem from_base(const typename R0::Elem& x) const {
        Elem e = make();
        e.c[0] = x;
        return e;
    }

    bool is_zero(const Elem& a) const {
        for (auto& v : a.c)
            if (!b_->is_zero(v)) return false;
        return true;
    }
    bool equal(const Elem& a, const Elem& b) const {
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!b_->equal(a.c[i], b.c[i])) return false;
        return true;
    }

    Elem add(const Elem& x, const Elem& y) const {
        Elem z = make();
        for (size_t i = 0; i < z.c.size(); ++i) z.c[i] = b_->add(x.c[i], y.c[i]);
        return z;
    }
    Elem neg(const Elem& x) const {
        Elem z = x;
        for (auto& v : z.c) v = b_->neg(v);
        return z;
    }
    Elem sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

    Elem mul(const Elem& x, const Elem& y) const {
        Elem z = make();
        uint32_t n = g_->order();
        for (uint16_t i = 0; i < n; ++i) {
            if (b_->is_zero(x.c[i])) continue;
            for (uint16_t j = 0; j < n; ++j) {
                if (b_->is_zero(y.c[j])) continue;
                uint16_t k = g_->op(i, j);
                z.c[k] = b_->add(z.c[k], b_->mul(x.c[i], y.c[j]));
            }
        }
        return z;
    }

    Elem mul_base(const Elem& x, const typename R0::Elem& s) const {
        Elem z = x;
        for (auto& v : z.c) v = b_->mul(s, v);
        return z;
    }

    // x -> g.x (left translation)
    Elem translate(uint16_t g, const Elem& x) const {
        Elem z = make();
        for (uint16_t j = 0; j < g_->order(); ++j) z.c[g_->op(g, j)] = x.c[j];
        return z;
    }

    // the ring automorphism induced by g -> g^{-1}
    Elem involute(const Elem& x) const {
        Elem z = make();
        for (uint16_t j = 0; j < g_->order(); ++j) z.c[g_->inv(j)] = x.c[j];
        return z;
    }

    // augmentation map R0[G] -> R0
    typename R0::Elem augment(const Elem& x) const {
        typename R0::Elem s = b_->zero();
        for (auto& v : x.c) s = b_->add(s, v);
        return s;
    }

    bool is_central(const Elem& x) const {
        for (uint16_t g = 0; g < g_->order(); ++g) {
            Elem gx = mul(group_elem(g), x);
            Elem xg = mul(x, group_elem(g));
            if (!equal(gx, xg)) return false;
        }
        return true;
    }

    template <class Printer>
    std::string to_string(const Elem& a, Printer p) const {
        std::string s;
        for (uint16_t g = 0; g < g_->order(); ++g) {
            if (b_->is_zero(a.c[g])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + p(a.c[g]) + ")g" + std::to_string(g);
        }
        return s.empty() ? "0" : s;
    }

   private:
    const FiniteGroup* g_;
    const R0* b_;
};

using FqGroupRing = GroupRingOf<FqField>;

}  // namespace dlv

#endif
