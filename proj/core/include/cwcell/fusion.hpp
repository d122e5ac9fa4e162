#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cwcell/group_ops.hpp"
#include "cwcell/local.hpp"
#include "cwcell/perm_group.hpp"

namespace cwcell {

// An element of S together with a checkable reason it lies in the
// fusion closure: conjugator * element * conjugator^-1 is in Omega1(S).
struct FusedElement {
    Perm element;
    Perm conjugator;
};

struct FusionReport {
    std::uint64_t p;
    SubgroupHandle sylow;
    SubgroupHandle omega;  // Omega1(S), the set of fusion targets
    std::vector<FusedElement> fused;
    SubgroupHandle closure;  // subgroup of S generated by the fused elements
    bool closure_generates;  // closure == S
    std::optional<bool> controlled_by_normalizer;
    std::optional<bool> ti;
};

// Subgroup of S generated by every s in S with a G-conjugate inside
// Omega1(S).  Requires S to be a Sylow p-subgroup of g (full p-part
// order), and g small enough for an exact class decomposition.
FusionReport fusion_closure(const PermGroup& g, const SubgroupHandle& s, std::uint64_t p,
                            const Limits& lim = {});

struct FusionControl {
    bool controlled;
    // On failure: a pair of S-elements conjugate in G but not in
    // N_G(S), with the G-conjugator mapping first to second.
    std::optional<std::pair<Perm, Perm>> counterexample;
    std::optional<Perm> g_conjugator;
};

// Whether every G-conjugacy between elements of S is realized inside
// N_G(S) already.
FusionControl fusion_controlled_by_normalizer(const PermGroup& g, const SubgroupHandle& s,
                                              const Limits& lim = {});

// Whether distinct Sylow p-subgroups of g pairwise intersect trivially.
// A normal Sylow subgroup passes vacuously.  count_out, when non-null,
// receives the number of Sylow p-subgroups.
bool ti_sylow(const PermGroup& g, std::uint64_t p, const Limits& lim = {},
              std::size_t* count_out = nullptr);

}  // namespace cwcell
