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

#include "dlv/fq_poly.hpp"

#include <algorithm>
#include <sstream>

#include "dlv/kernels.hpp"

namespace dlv {

FqPoly FqPoly::t_power(size_t k, FqField::Elem lead) {
    if (lead == 0) return FqPoly();
    std::vector<uint16_t> c(k + 1, 0);
    c[k] = lead;
    return FqPoly(std::move(c));
}

bool FqPoly::less(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t k = a.c_.size(); k-- > 0;) {
        if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
    }
    return false;
}

std::string FqPoly::to_string(const FqField& F, const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        FqField::Elem a = coeff(size_t(k));
        if (a == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0 || a != 1) os << F.to_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

PolyRing::Elem PolyRing::add(const Elem& a, const Elem& b) const {
    std::vector<uint16_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    size_t n = std::min(a.c_.size(), b.c_.size());
    if (F_->is_prime_field() && F_->ell() <= kern::kMaxPrime && n > 0)
        kern::vec_add(c.data(), a.c_.data(), b.c_.data(), n, F_->ell());
    else
        for (size_t i = 0; i < n; ++i) c[i] = F_->add(a.c_[i], b.c_[i]);
    const auto& rest = a.c_.size() > b.c_.size() ? a.c_ : b.c_;
    for (size_t i = n; i < rest.size(); ++i) c[i] = rest[i];
    return Elem(std::move(c));
}

PolyRing::Elem PolyRing::neg(const Elem& a) const {
    std::vector<uint16_t> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = F_->neg(a.c_[i]);
    return Elem(std::move(c));
}

PolyRing::Elem PolyRing::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

PolyRing::Elem PolyRing::mul(const Elem& a, const Elem& b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<uint16_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        if (F_->is_prime_field() && F_->ell() <= kern::kMaxPrime)
            kern::vec_axpy(c.data() + i, b.c_.data(), a.c_[i], b.c_.size(), F_->ell());
        else
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = F_->add(c[i + j], F_->mul(a.c_[i], b.c_[j]));
    }
    return Elem(std::move(c));
}

PolyRing::Elem PolyRing::mul_scalar(const Elem& a, FqField::Elem s) const {
    if (s == 0) return zero();
    std::vector<uint16_t> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = F_->mul(a.c_[i], s);
    return Elem(std::move(c));
}

PolyRing::Elem PolyRing::pow(Elem base, uint64_t n) const {
    Elem r = one();
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

void PolyRing::divrem(const Elem& a, const Elem& b, Elem& q, Elem& r) const {
    if (b.is_zero()) throw InvertZero();
    r = a;
    q = zero();
    if (a.degree() < b.degree()) return;
    std::vector<uint16_t> qc(size_t(a.degree() - b.degree()) + 1, 0);
    FqField::Elem lead_inv = F_->inv(b.lead());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        size_t shift = size_t(r.degree() - b.degree());
        FqField::Elem c = F_->mul(r.lead(), lead_inv);
        qc[shift] = c;
        // r -= c * t^shift * b
        FqField::Elem mc = F_->neg(c);
        for (size_t k = 0; k < b.c_.size(); ++k)
            r.c_[shift + k] = F_->add(r.c_[shift + k], F_->mul(mc, b.c_[k]));
        r.trim();
    }
    q = Elem(std::move(qc));
}

PolyRing::Elem PolyRing::mod(const Elem& a, const Elem& b) const {
    Elem q, r;
    divrem(a, b, q, r);
    return r;
}

PolyRing::Elem PolyRing::div_exact(const Elem& a, const Elem& b) const {
    Elem q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw Error("non-exact polynomial division");
    return q;
}

PolyRing::Elem PolyRing::monic(const Elem& a) const {
    if (a.is_zero() || a.is_monic()) return a;
    return mul_scalar(a, F_->inv(a.lead()));
}

PolyRing::Elem PolyRing::gcd(Elem a, Elem b) const {
    while (!b.is_zero()) {
        Elem r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

PolyRing::Elem PolyRing::xgcd(const Elem& a, const Elem& b, Elem& u, Elem& v) const {
    Elem r0 = a, r1 = b;
    Elem u0 = one(), u1 = zero();
    Elem v0 = zero(), v1 = one();
    while (!r1.is_zero()) {
        Elem q, r;
        divrem(r0, r1, q, r);
        Elem u2 = sub(u0, mul(q, u1));
        Elem v2 = sub(v0, mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero() && !r0.is_monic()) {
        FqField::Elem s = F_->inv(r0.lead());
        r0 = mul_scalar(r0, s);
        u0 = mul_scalar(u0, s);
        v0 = mul_scalar(v0, s);
    }
    u = std::move(u0);
    v = std::move(v0);
    return r0;
}

PolyRing::Elem PolyRing::lcm(const Elem& a, const Elem& b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return monic(div_exact(mul(a, b), gcd(a, b)));
}

FqField::Elem PolyRing::eval(const Elem& a, FqField::Elem x) const {
    FqField::Elem r = 0;
    for (size_t k = a.c_.size(); k-- > 0;) r = F_->add(F_->mul(r, x), a.c_[k]);
    return r;
}

PolyRing::Elem PolyRing::derivative(const Elem& a) const {
    if (a.c_.size() <= 1) return zero();
    std::vector<uint16_t> c(a.c_.size() - 1);
    for (size_t k = 1; k < a.c_.size(); ++k) {
        FqField::Elem m = F_->from_int(int64_t(k));
        c[k - 1] = F_->mul(a.c_[k], m);
    }
    return Elem(std::move(c));
}

PolyRing::Elem PolyRing::coeff_frob(const Elem& a) const {
    std::vector<uint16_t> c(a.c_.size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = F_->frob(a.c_[k]);
    return Elem(std::move(c));
}

PolyRing::Elem PolyRing::pow_mod(Elem base, uint64_t n, const Elem& m) const {
    Elem r = one();
    base = mod(base, m);
    while (n) {
        if (n & 1) r = mod(mul(r, base), m);
        base = mod(mul(base, base), m);
        n >>= 1;
    }
    return r;
}

bool PolyRing::is_irreducible(const Elem& f) const {
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const Elem t = FqPoly::t_power(1);
    // x^{q^d} == x mod f
    Elem xp = t;
    for (int k = 0; k < d; ++k) xp = pow_mod(xp, F_->q(), f);
    if (!equal(xp, mod(t, f))) return false;
    // gcd(x^{q^{d/p}} - x, f) = 1 for every prime p | d
    for (int p = 2; p <= d; ++p) {
        if (d % p != 0) continue;
        bool prime = true;
        for (int dd = 2; dd * dd <= p; ++dd)
            if (p % dd == 0) prime = false;
        if (!prime) continue;
        Elem xs = t;
        for (int k = 0; k < d / p; ++k) xs = pow_mod(xs, F_->q(), f);
        Elem g = gcd(sub(xs, t), f);
        if (g.degree() != 0) return false;
    }
    return true;
}

std::vector<FqPoly> enumerate_monic(const FqField& F, int d) {
    std::vector<FqPoly> out;
    uint64_t count = 1;
    for (int k = 0; k < d; ++k) count *= F.q();
    out.reserve(count);
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::vector<uint16_t> c(size_t(d) + 1, 0);
        uint64_t v = idx;
        for (int k = 0; k < d; ++k) {
            c[size_t(k)] = uint16_t(v % F.q());
            v /= F.q();
        }
        c[size_t(d)] = 1;
        out.emplace_back(std::move(c));
    }
    return out;
}

std::vector<FqPoly> enumerate_monic_irreducibles(const FqField& F, int d) {
    PolyRing R(F);
    std::vector<FqPoly> out;
    for (int m = 1; m <= d; ++m) {
        std::vector<FqPoly> deg_m;
        for (auto& f : enumerate_monic(F, m))
            if (R.is_irreducible(f)) deg_m.push_back(std::move(f));
        std::sort(deg_m.begin(), deg_m.end(), FqPoly::less);
        for (auto& f : deg_m) out.push_back(std::move(f));
    }
    return out;
}

uint64_t count_monic_irreducibles(uint32_t q, uint32_t m) {
    auto moebius = [](uint32_t n) -> int {
        int mu = 1;
        for (uint32_t p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                mu = -mu;
            }
        }
        if (n > 1) mu = -mu;
        return mu;
    };
    int64_t total = 0;
    for (uint32_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        uint64_t qp = 1;
        for (uint32_t k = 0; k < m / d; ++k) qp *= q;
        total += int64_t(mu) * int64_t(qp);
    }
    return uint64_t(total / m);
}

namespace {

// Cantor–Zassenhaus equal-degree splitting.
void equal_degree_split(const PolyRing& R, const FqPoly& f, int d, std::mt19937_64& rng,
                        std::vector<FqPoly>& out) {
    if (f.degree() == d) {
        out.push_back(R.monic(f));
        return;
    }
    const FqField& F = R.field();
    uint64_t q = F.q();
    for (;;) {
        // random polynomial of degree < deg f
        std::vector<uint16_t> c(size_t(f.degree()), 0);
        for (auto& x : c) x = uint16_t(rng() % q);
        FqPoly a{std::move(c)};
        if (a.is_zero()) continue;
        FqPoly g = R.gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(R, g, d, rng, out);
            equal_degree_split(R, R.div_exact(f, g), d, rng, out);
            return;
        }
        FqPoly b;
        if (F.ell() == 2) {
            // trace map T(a) = a + a^2 + ... + a^{2^{kd-1}} mod f
            uint32_t kd = uint32_t(d) * F.e();
            FqPoly s = a, cur = a;
            for (uint32_t i = 1; i < kd; ++i) {
                cur = R.pow_mod(cur, 2, f);
                s = R.add(s, cur);
            }
            b = s;
        } else {
            // a^{(q^d-1)/2} - 1
            uint64_t e = 1;
            for (int k = 0; k < d; ++k) e *= q;
            b = R.sub(R.pow_mod(a, (e - 1) / 2, f), R.one());
        }
        g = R.gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(R, g, d, rng, out);
            equal_degree_split(R, R.div_exact(f, g), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<FqPoly, int>> factor_poly(const FqField& F, const FqPoly& f0,
                                                uint64_t seed) {
    PolyRing R(F);
    std::vector<std::pair<FqPoly, int>> out;
    if (f0.degree() <= 0) return out;
    std::mt19937_64 rng(seed);
    FqPoly f = R.monic(f0);

    // squarefree decomposition via repeated gcd with the derivative
    std::vector<std::pair<FqPoly, int>> squarefree;  // (g, multiplicity)
    int mult_base = 1;
    while (f.degree() > 0) {
        FqPoly df = R.derivative(f);
        if (df.is_zero()) {
            // f is a q/ell-th power: f(t) = g(t^ell) with coefficient roots
            std::vector<uint16_t> c(size_t(f.degree() / int(F.ell())) + 1, 0);
            for (size_t k = 0; k < c.size(); ++k) {
                FqField::Elem a = f.coeff(k * F.ell());
                // ell-th root in F_q: a^{q/ell}
                uint64_t e = 1;
                for (uint32_t i = 0; i + 1 < F.e(); ++i) e *= F.ell();
                // a^{ell^{e-1}} is the ell-th root since a^{ell^e} = a
                c[k] = F.pow(a, e);
            }
            f = FqPoly(std::move(c));
            mult_base *= int(F.ell());
            continue;
        }
        FqPoly g = R.gcd(f, df);
        FqPoly w = R.div_exact(f, g);
        int i = 1;
        while (w.degree() > 0) {
            FqPoly y = R.gcd(w, g);
            FqPoly z = R.div_exact(w, y);
            if (z.degree() > 0) squarefree.push_back({z, i * mult_base});
            ++i;
            w = y;
            g = R.div_exact(g, y);
        }
        f = g;
    }

    for (auto& [sf, mult] : squarefree) {
        // distinct-degree
        FqPoly rem = sf;
        FqPoly x = FqPoly::t_power(1);
        FqPoly h = x;
        int d = 1;
        while (rem.degree() >= 2 * d) {
            h = R.pow_mod(h, F.q(), rem);
            FqPoly g = R.gcd(R.sub(h, x), rem);
            if (g.degree() > 0) {
                std::vector<FqPoly> parts;
                equal_degree_split(R, g, d, rng, parts);
                for (auto& p : parts) out.push_back({p, mult});
                rem = R.div_exact(rem, g);
                h = R.mod(h, rem);
            }
            ++d;
        }
        if (rem.degree() > 0) out.push_back({rem, mult});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return FqPoly::less(a.first, b.first); });
    return out;
}

}  // namespace dlv
