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

#ifndef DLV_LAURENT_HPP
#define DLV_LAURENT_HPP

#include <algorithm>
#include <limits>
#include <string>

#include "dlv/rings.hpp"

namespace dlv {

// An element of R((t^-1)) with a per-value precision window. Coefficients are
// stored low exponent first: c[i] is the coefficient of t^{floor+i}.
//
//   exact == true:  every coefficient outside the window is zero; the value
//                   is known completely (a Laurent polynomial).
//   exact == false: coefficients at exponents >= floor are exact, those
//                   below floor are unknown. The window may be all zero
//                   ("zero to this precision").
//
// Every operation computes the provably-correct floor of its result from the
// operand windows; nothing is ever claimed below that floor.
template <Ring R>
struct Laurent {
    int floor = 0;
    bool exact = true;
    std::vector<typename R::Elem> c;

    int top() const { return floor + int(c.size()) - 1; }  // floor-1 when empty
    bool window_empty() const { return c.empty(); }
};

template <Ring R>
class LaurentOps {
   public:
    using L = Laurent<R>;
    using E = typename R::Elem;
    static constexpr int kMinusInf = std::numeric_limits<int>::min() / 4;

    explicit LaurentOps(const R& base) : b_(&base) {}
    const R& base() const { return *b_; }

    L zero() const { return L{0, true, {}}; }
    L one() const { return from_coeff(0, b_->one()); }
    L from_coeff(int exp, const E& v) const {
        if (b_->is_zero(v)) return zero();
        L a;
        a.floor = exp;
        a.exact = true;
        a.c = {v};
        return a;
    }
    // exact value from coefficients [lo .. lo+len-1]
    L from_coeffs(int lo, std::vector<E> coeffs, bool exact = true) const {
        L a;
        a.floor = lo;
        a.exact = exact;
        a.c = std::move(coeffs);
        return normalize(std::move(a));
    }

    L normalize(L a) const {
        while (!a.c.empty() && b_->is_zero(a.c.back())) a.c.pop_back();
        if (a.exact) {
            size_t k = 0;
            while (k < a.c.size() && b_->is_zero(a.c[k])) ++k;
            if (k) {
                a.c.erase(a.c.begin(), a.c.begin() + k);
                a.floor += int(k);
            }
            if (a.c.empty()) a.floor = 0;
        }
        return a;
    }

    bool is_exact_zero(const L& a) const { return a.exact && a.c.empty(); }
    // true when no coefficient in the known window is nonzero
    bool is_zero_to_precision(const L& a) const { return a.c.empty(); }

    E coeff(const L& a, int exp) const {
        if (exp < a.floor) {
            if (!a.exact) throw PrecisionExhausted("coefficient below precision floor");
            return b_->zero();
        }
        size_t i = size_t(exp - a.floor);
        return i < a.c.size() ? a.c[i] : b_->zero();
    }
    // coefficient if known, zero otherwise (no throw)
    E coeff_or_zero(const L& a, int exp) const {
        if (exp < a.floor) return b_->zero();
        size_t i = size_t(exp - a.floor);
        return i < a.c.size() ? a.c[i] : b_->zero();
    }

    int floor_of(const L& a) const { return a.exact ? kMinusInf : a.floor; }

    L add(const L& x, const L& y) const {
        int fl;
        bool exact = x.exact && y.exact;
        if (exact)
            fl = std::min(x.c.empty() ? 0 : x.floor, y.c.empty() ? 0 : y.floor);
        else
            fl = std::max(floor_of(x), floor_of(y));
        int hi = std::max(x.top(), y.top());
        if (hi < fl) {
            L a;
            a.floor = fl;
            a.exact = exact;
            return normalize(std::move(a));
        }
        L a;
        a.floor = fl;
        a.exact = exact;
        a.c.assign(size_t(hi - fl + 1), b_->zero());
        for (int e = fl; e <= hi; ++e)
            a.c[size_t(e - fl)] = b_->add(coeff_or_zero(x, e), coeff_or_zero(y, e));
        return normalize(std::move(a));
    }

    L neg(const L& x) const {
        L a = x;
        for (auto& v : a.c) v = b_->neg(v);
        return a;
    }
    L sub(const L& x, const L& y) const { return add(x, neg(y)); }

    L mul(const L& x, const L& y) const {
        if (is_exact_zero(x) || is_exact_zero(y)) return zero();
        // contamination analysis: unknown tails start below the floors
        bool exact = x.exact && y.exact;
        int fl = 0;
        if (!exact) {
            int cand = std::numeric_limits<int>::min();
            int tx = x.c.empty() ? x.floor - 1 : x.top();
            int ty = y.c.empty() ? y.floor - 1 : y.top();
            if (!x.exact) cand = std::max(cand, x.floor + ty);
            if (!y.exact) cand = std::max(cand, y.floor + tx);
            if (!x.exact && !y.exact) cand = std::max(cand, x.floor + y.floor - 1);
            fl = cand;
        }
        if (x.c.empty() || y.c.empty()) {
            // a window that is zero to precision: product known zero above fl
            L a;
            a.floor = exact ? 0 : fl;
            a.exact = exact;
            return a;
        }
        int lo = x.floor + y.floor;
        std::vector<E> prod(x.c.size() + y.c.size() - 1, b_->zero());
        for (size_t i = 0; i < x.c.size(); ++i) {
            if (b_->is_zero(x.c[i])) continue;
            for (size_t j = 0; j < y.c.size(); ++j)
                prod[i + j] = b_->add(prod[i + j], b_->mul(x.c[i], y.c[j]));
        }
        L a;
        a.exact = exact;
        if (exact) {
            a.floor = lo;
            a.c = std::move(prod);
        } else {
            a.floor = fl;
            if (fl <= lo + int(prod.size()) - 1) {
                if (fl <= lo) {
                    // known part reaches below computed support; pad with zeros
                    a.c.assign(size_t(lo - fl), b_->zero());
                    a.c.insert(a.c.end(), prod.begin(), prod.end());
                } else {
                    a.c.assign(prod.begin() + (fl - lo), prod.end());
                }
            }
        }
        return normalize(std::move(a));
    }

    L mul_base(const L& x, const E& s) const {
        L a = x;
        for (auto& v : a.c) v = b_->mul(s, v);
        return normalize(std::move(a));
    }

    L shift(const L& x, int k) const {  // multiply by t^k
        L a = x;
        a.floor += k;
        if (a.exact && a.c.empty()) a.floor = 0;
        return a;
    }

    // Restrict the known window to exponents >= f. Discarding coefficients
    // of an exact value marks the result inexact with floor f.
    L truncate_to_floor(const L& x, int f) const {
        if (x.exact) {
            if (x.c.empty() || x.floor >= f) return x;  // nothing below f
        } else if (x.floor >= f) {
            return x;  // already coarser than requested
        }
        L a;
        a.exact = false;
        a.floor = f;
        if (!x.c.empty() && x.top() >= f) {
            size_t start = size_t(f - x.floor);
            a.c.assign(x.c.begin() + start, x.c.end());
        }
        return normalize(std::move(a));
    }

    // Compare on the common known window [max(floors), +inf). A comparison
    // that would inspect no coefficient at all is vacuous and errors.
    bool equal_on_overlap(const L& x, const L& y) const {
        int fl = std::max(floor_of(x), floor_of(y));
        int hi = std::max(x.top(), y.top());
        if (hi < fl) {
            if (x.exact && y.exact) return true;  // both exactly zero
            throw PrecisionExhausted("comparison windows do not overlap");
        }
        // below both stored windows every known coefficient is zero
        int lo_sup = std::min(x.c.empty() ? hi + 1 : x.floor, y.c.empty() ? hi + 1 : y.floor);
        for (int e = std::max(fl, lo_sup); e <= hi; ++e)
            if (!b_->equal(coeff_or_zero(x, e), coeff_or_zero(y, e))) return false;
        return true;
    }

    // Mark a value as known only on [f, +inf) even if it is exact.
    L with_floor(const L& x, int f) const {
        L a = truncate_to_floor(x, f);
        if (!a.exact) return a;
        L r;
        r.exact = false;
        r.floor = f;
        if (!a.c.empty() && a.top() >= f) {
            r.c.assign(size_t(a.top() - f + 1), b_->zero());
            for (size_t i = 0; i < a.c.size(); ++i) r.c[size_t(a.floor - f) + i] = a.c[i];
        }
        return normalize(std::move(r));
    }

    // u must have its highest known coefficient equal to 1 (a "monic" unit
    // 1*t^d + lower). Returns u^{-1} to the requested floor.
    L invert_monic_lead(const L& u, int target_floor) const {
        if (u.c.empty()) throw InvertZero();
        if (!b_->equal(u.c.back(), b_->one()))
            throw Error("series inversion requires leading coefficient 1");
        int d = u.top();
        // u = t^d (1 + w), w = lower part shifted; inverse = t^-d sum (-w)^k
        L w = shift(u, -d);
        w.c.back() = b_->zero();
        w = normalize(std::move(w));  // strictly negative exponents now
        int partial = target_floor + d;
        L acc = one();
        if (!is_exact_zero(w)) {
            int wtop = w.c.empty() ? w.floor - 1 : w.top();
            if (wtop >= 0) throw Error("series inversion: tail not strictly lower");
            L term = one();
            bool dropped = false;
            for (int k = 1;; ++k) {
                if (int64_t(k) * wtop < int64_t(partial)) {
                    dropped = true;  // real terms fall below the window
                    break;
                }
                term = truncate_to_floor(mul(term, neg(w)), partial);
                if (is_exact_zero(term)) break;
                acc = add(acc, term);
                if (term.c.empty()) break;  // zero to precision; floor carried into acc
            }
            if (dropped) acc = with_floor(acc, partial);
        }
        return shift(acc, -d);
    }

    template <class Printer>
    std::string to_string(const L& a, Printer print_coeff, const std::string& var = "t") const {
        std::string s;
        for (int e = a.top(); e >= a.floor; --e) {
            E v = coeff_or_zero(a, e);
            if (b_->is_zero(v)) continue;
            if (!s.empty()) s += " + ";
            s += print_coeff(v);
            if (e != 0) s += "*" + var + "^" + std::to_string(e);
        }
        if (s.empty()) s = "0";
        if (!a.exact) s += " + O(" + var + "^" + std::to_string(a.floor - 1) + ")";
        return s;
    }

   private:
    const R* b_;
};

}  // namespace dlv

#endif
