#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cwcell/group_ops.hpp"
#include "cwcell/perm_group.hpp"

namespace cwcell {

// Conjugacy class decomposition.  Exact mode visits every element and
// the class map is total; sampling mode (explicitly requested) only
// covers the classes of sampled elements and is marked incomplete.
// Representatives are the first element of each class in the group's
// canonical element-stream order, so the decomposition is
// deterministic.
class ConjugacyClasses {
  public:
    static ConjugacyClasses exact(const PermGroup& g, const Limits& lim = {});
    static ConjugacyClasses sampled(const PermGroup& g, std::size_t samples, std::uint64_t seed);

    std::size_t count() const { return reps_.size(); }
    const Perm& representative(std::size_t i) const { return reps_[i]; }
    std::uint64_t size(std::size_t i) const { return sizes_[i]; }
    bool complete() const { return complete_; }

    // Class index of an element; throws NonMember when the element is
    // not covered (always total in exact mode).
    std::uint32_t class_of(const Perm& x) const;

  private:
    std::vector<Perm> reps_;
    std::vector<std::uint64_t> sizes_;
    std::unordered_map<Perm, std::uint32_t, PermHash> class_of_;
    bool complete_ = false;
};

// Conjugating element g with g x g^{-1} == y, if x and y are conjugate
// in the group.  Walks the conjugation orbit of x, so memory is one
// stored conjugator per class element.
std::optional<Perm> conjugating_element(const PermGroup& g, const Perm& x, const Perm& y);

bool are_conjugate(const PermGroup& g, const Perm& x, const Perm& y);

}  // namespace cwcell
