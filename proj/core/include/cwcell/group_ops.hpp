#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cwcell/perm_group.hpp"

namespace cwcell {

// Limits for the two-tier exact/sampling machinery.  `enum_limit`
// bounds any full element enumeration; `index_limit` bounds coset
// spaces.  Exceeding a limit raises OrderExceedsLimit or
// IndexExceedsLimit; nothing silently degrades.
struct Limits {
    std::uint64_t enum_limit = 1'000'000;
    std::uint64_t index_limit = 100'000;
};

// Smallest subgroup of `g` containing `seed` and closed under
// conjugation by the generators of `g`.
SubgroupHandle normal_closure(const PermGroup& g, const std::vector<Perm>& seed);

// Elements of `g` commuting with x, by exact streaming of `g`.
SubgroupHandle centralizer(const PermGroup& g, const Perm& x, const Limits& lim = {});

// Elements of `g` conjugating the subgroup onto itself, by exact
// streaming of `g`.
SubgroupHandle normalizer(const PermGroup& g, const PermGroup& sub, const Limits& lim = {});

// Left-coset space of a normal subgroup, with the induced permutation
// action of `g` on it.  Coset representatives are canonical (minimal
// base images under right multiplication by the subgroup), so two
// elements lie in the same coset iff they canonicalize identically.
class QuotientMap {
  public:
    QuotientMap(const PermGroup& g, const PermGroup& normal_sub, const Limits& lim = {});

    const PermGroup& group() const { return group_; }
    const PermGroup& kernel() const { return kernel_; }
    const PermGroup& quotient() const { return quotient_; }
    std::uint64_t index() const { return reps_.size(); }
    const std::vector<Perm>& coset_reps() const { return reps_; }

    // Index of the coset gN; throws NonMember for g outside the group.
    std::uint32_t coset_index(const Perm& g) const;
    Perm canonical_rep(const Perm& g) const;
    // Image of g as a permutation of coset indices.
    Perm image(const Perm& g) const;

  private:
    PermGroup group_;
    PermGroup kernel_;
    PermGroup quotient_;
    std::vector<Perm> reps_;
    std::unordered_map<Perm, std::uint32_t, PermHash> index_of_;
};

// Subgroup generated by the union of a handle's group and extra
// elements of the same parent.
SubgroupHandle extend_subgroup(const SubgroupHandle& h, const std::vector<Perm>& extra);

}  // namespace cwcell
