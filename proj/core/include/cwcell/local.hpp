#pragma once

#include <cstdint>
#include <optional>

#include "cwcell/group_ops.hpp"
#include "cwcell/perm_group.hpp"

namespace cwcell {

// Result of a computation that may have fallen back to sampling; only
// certified results feed certificates downstream.
struct MaybeCertified {
    SubgroupHandle sub;
    bool certified;
};

bool is_p_group(const PermGroup& g, std::uint64_t p);

// A Sylow p-subgroup, deterministic for a fixed group and prime.
// Generic route: grow a p-subgroup by repeatedly adjoining a p-element
// of its normalizer, which cannot get stuck short of Sylow order.  For
// symmetric-family groups the iterated-wreath Sylow 2-subgroup is
// constructed directly instead of by ascent.
SubgroupHandle sylow_subgroup(const PermGroup& g, std::uint64_t p, const Limits& lim = {});

// Subgroup generated by all elements of order exactly p (trivial when
// p does not divide the order).
SubgroupHandle omega1(const PermGroup& g, std::uint64_t p, const Limits& lim = {});

// Same, but viewed inside a handle's parent.
SubgroupHandle omega1_in_parent(const SubgroupHandle& h, std::uint64_t p,
                                const Limits& lim = {});

// Normal subgroup generated by all order-p elements of g.  Within the
// enumeration limit this streams every element and the result is
// certified; past the limit it falls back to seeded sampling and the
// result is only a lower bound, flagged uncertified.
MaybeCertified omega1_radical(const PermGroup& g, std::uint64_t p, const Limits& lim = {},
                              std::uint64_t seed = 0);

// Smallest normal subgroup with p-group quotient: generated by all
// elements of order coprime to p.
MaybeCertified p_residual(const PermGroup& g, std::uint64_t p, const Limits& lim = {},
                          std::uint64_t seed = 0);

}  // namespace cwcell
