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

#ifndef DLV_GROUP_HPP
#define DLV_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dlv/error.hpp"

namespace dlv {

// A finite group given by its Cayley table. Element ids are 0..n-1 with 0
// the identity. The table is validated exhaustively on construction
// (supported orders are small; everything here is <= 64).
class FiniteGroup {
   public:
    FiniteGroup(std::vector<uint16_t> cayley, std::string name);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(uint32_t m);
    static FiniteGroup symmetric3();

    uint32_t order() const { return n_; }
    const std::string& name() const { return name_; }
    uint16_t op(uint16_t a, uint16_t b) const { return cayley_[size_t(a) * n_ + b]; }
    uint16_t inv(uint16_t a) const { return inv_[a]; }
    bool abelian() const { return abelian_; }
    uint32_t commutator_subgroup_order() const { return uint32_t(commutator_.size()); }
    const std::vector<uint16_t>& commutator_subgroup() const { return commutator_; }

    uint32_t element_order(uint16_t g) const;

    // Non-trivial cyclic subgroups, one per distinct subgroup, as sorted
    // element lists.
    const std::vector<std::vector<uint16_t>>& cyclic_subgroups() const { return cyclic_; }

    // Conjugacy classes as sorted element lists (class of identity first).
    const std::vector<std::vector<uint16_t>>& conjugacy_classes() const { return classes_; }

    bool operator==(const FiniteGroup& o) const { return cayley_ == o.cayley_; }

   private:
    uint32_t n_;
    std::vector<uint16_t> cayley_;
    std::vector<uint16_t> inv_;
    bool abelian_;
    std::vector<uint16_t> commutator_;
    std::vector<std::vector<uint16_t>> cyclic_;
    std::vector<std::vector<uint16_t>> classes_;
    std::string name_;

    void validate_and_fill();
};

}  // namespace dlv

#endif
