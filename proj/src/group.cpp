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

#include "dlv/group.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dlv {

FiniteGroup::FiniteGroup(std::vector<uint16_t> cayley, std::string name)
    : cayley_(std::move(cayley)), name_(std::move(name)) {
    double root = std::sqrt(double(cayley_.size()));
    n_ = uint32_t(root + 0.5);
    if (size_t(n_) * n_ != cayley_.size() || n_ == 0)
        throw ConfigError("Cayley table is not square");
    if (n_ > 64) throw ConfigError("group order above 64 is not supported");
    validate_and_fill();
}

void FiniteGroup::validate_and_fill() {
    // identity
    for (uint16_t a = 0; a < n_; ++a)
        if (op(0, a) != a || op(a, 0) != a)
            throw ConfigError("element 0 is not an identity in the Cayley table");
    // closure/range
    for (auto v : cayley_)
        if (v >= n_) throw ConfigError("Cayley table entry out of range");
    // associativity, exhaustive
    for (uint16_t a = 0; a < n_; ++a)
        for (uint16_t b = 0; b < n_; ++b)
            for (uint16_t c = 0; c < n_; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw ConfigError("Cayley table is not associative");
    // inverses
    inv_.assign(n_, 0);
    for (uint16_t a = 0; a < n_; ++a) {
        bool found = false;
        for (uint16_t b = 0; b < n_; ++b)
            if (op(a, b) == 0 && op(b, a) == 0) {
                inv_[a] = b;
                found = true;
                break;
            }
        if (!found) throw ConfigError("Cayley table has an element without inverse");
    }
    abelian_ = true;
    for (uint16_t a = 0; a < n_ && abelian_; ++a)
        for (uint16_t b = 0; b < n_; ++b)
            if (op(a, b) != op(b, a)) {
                abelian_ = false;
                break;
            }
    // commutator subgroup: closure of all commutators under multiplication
    std::set<uint16_t> comm{0};
    for (uint16_t a = 0; a < n_; ++a)
        for (uint16_t b = 0; b < n_; ++b)
            comm.insert(op(op(a, b), op(inv_[a], inv_[b])));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<uint16_t> cur(comm.begin(), comm.end());
        for (auto x : cur)
            for (auto y : cur)
                if (comm.insert(op(x, y)).second) grew = true;
    }
    commutator_.assign(comm.begin(), comm.end());
    if (n_ % commutator_.size() != 0)
        throw ConfigError("commutator subgroup order does not divide the group order");
    // cyclic subgroups
    std::set<std::vector<uint16_t>> subs;
    for (uint16_t g = 1; g < n_; ++g) {
        std::vector<uint16_t> sub{0};
        uint16_t x = g;
        while (x != 0) {
            sub.push_back(x);
            x = op(x, g);
        }
        std::sort(sub.begin(), sub.end());
        subs.insert(sub);
    }
    cyclic_.assign(subs.begin(), subs.end());
    // conjugacy classes
    std::vector<char> seen(n_, 0);
    for (uint16_t g = 0; g < n_; ++g) {
        if (seen[g]) continue;
        std::set<uint16_t> cls;
        for (uint16_t h = 0; h < n_; ++h) cls.insert(op(op(h, g), inv_[h]));
        std::vector<uint16_t> v(cls.begin(), cls.end());
        for (auto x : v) seen[x] = 1;
        classes_.push_back(std::move(v));
    }
}

uint32_t FiniteGroup::element_order(uint16_t g) const {
    uint32_t ord = 1;
    uint16_t x = g;
    while (x != 0) {
        x = op(x, g);
        ++ord;
    }
    return ord;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({0}, "1"); }

FiniteGroup FiniteGroup::cyclic(uint32_t m) {
    std::vector<uint16_t> t(size_t(m) * m);
    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = 0; b < m; ++b) t[size_t(a) * m + b] = uint16_t((a + b) % m);
    return FiniteGroup(std::move(t), "C" + std::to_string(m));
}

FiniteGroup FiniteGroup::symmetric3() {
    // elements: 0=e, 1=r, 2=r^2, 3=s, 4=sr, 5=sr^2 with r^3=s^2=e, rs=sr^2
    auto mul = [](uint16_t a, uint16_t b) -> uint16_t {
        auto dec = [](uint16_t x) { return std::pair<int, int>{x / 3, x % 3}; };  // (s-exp, r-exp)
        auto [sa, ra] = dec(a);
        auto [sb, rb] = dec(b);
        // (s^sa r^ra)(s^sb r^rb) = s^{sa+sb} r^{ra*(-1)^sb + rb}
        int s = (sa + sb) % 2;
        int r = ((sb ? -ra : ra) + rb) % 3;
        if (r < 0) r += 3;
        return uint16_t(s * 3 + r);
    };
    std::vector<uint16_t> t(36);
    for (uint16_t a = 0; a < 6; ++a)
        for (uint16_t b = 0; b < 6; ++b) t[size_t(a) * 6 + b] = mul(a, b);
    return FiniteGroup(std::move(t), "S3");
}

}  // namespace dlv
