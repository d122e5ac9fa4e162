#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cwcell/gf.hpp"
#include "cwcell/group_ops.hpp"
#include "cwcell/perm_group.hpp"

namespace cwcell {

PermGroup cyclic_group(std::uint64_t n);
PermGroup elem_abelian_group(std::uint64_t p, std::uint64_t k);
// Order 2n on n points, n >= 3.
PermGroup dihedral_group(std::uint64_t n);
// Order 2^k >= 16, given as the order.
PermGroup semidihedral_group(std::uint64_t order);
PermGroup symmetric_group(std::uint64_t n);
PermGroup alternating_group(std::uint64_t n);
// Sylow 2-subgroup of the symmetric group on n points, in its natural
// degree-n action (iterated wreath products over the binary blocks of n).
PermGroup sylow2_symmetric_group(std::uint64_t n);
// Generators only, for reuse on an ambient symmetric group.
std::vector<Perm> sylow2_symmetric_generators(std::uint64_t n);

// (Z/4)^3-affine realization of the order-96 group V . Sigma_3, where
// V is the kernel of the coordinate-sum map (Z/4)^3 -> Z/4 and
// Sigma_3 permutes the coordinates.
PermGroup thevenaz_group();

// PSL_2(q) on the q+1 points of the projective line, q a prime power
// >= 4.
PermGroup psl2_group(std::uint64_t q, const Limits& lim = {});
// PSL_3(3) = SL_3(3) on the 13 points of PG(2,3).
PermGroup psl3_3_group(const Limits& lim = {});
// Suzuki group Sz(q) on its q^2+1 ovoid points, q = 2^n with odd n,
// 3 <= n <= 13.  The construction is certified: the ovoid orbit must
// close at exactly q^2+1 points and the group order must come out as
// q^2 (q^2+1) (q-1).
PermGroup suzuki_group(std::uint64_t q, const Limits& lim = {});

// Sz(q) with its standard local structure made explicit: a generating
// set for the Sylow 2-subgroup S (stabilizer of infinity_point), the
// torus normalizing it, and lookup tables that decompose any element
// of the stabilizer of infinity_point as S(a,b) * torus^j.  All
// advertised facts are certified during construction (orders, the
// regular S-orbit through zero_point, the unique S-fixed point).
// Tables are built through q = 32 only.
struct SuzukiModel {
    std::uint64_t q;
    std::uint32_t n;  // q = 2^n
    Field field;
    PermGroup group;
    std::vector<Perm> sylow_generators;  // unipotents S(x^k, 0), k < n
    Perm torus;                          // order q-1
    Point infinity_point;
    Point zero_point;
    std::vector<Perm> unipotent;  // S(a,b) at index a*q + b
    // (a,b) with S(a,b) mapping zero_point to the given point; the
    // infinity_point slot is meaningless
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ab_of_point;
};
SuzukiModel suzuki_model(std::uint64_t q, const Limits& lim = {});

// One-dimensional affine group over GF(q) on the q field-element
// codes, generated by x -> x+1 and x -> primitive*x.  Order q(q-1),
// certified.
PermGroup affine_field_group(std::uint64_t q);

// External semidirect product H x| K realized by its left-regular
// action on |H| * |K| points.  images[t][a] gives the image of H's
// generator a under the action of K's generator t, as an element of H.
// The table is verified to define automorphisms of H and a
// homomorphism K -> Aut(H); failures raise ActionNotAutomorphism.
PermGroup semidirect_product(const PermGroup& h, const PermGroup& k,
                             const std::vector<std::vector<Perm>>& images,
                             const Limits& lim = {});

struct BuiltinInfo {
    std::string name;
    std::string params;  // human-readable parameter signature
    std::string summary;
};
const std::vector<BuiltinInfo>& builtin_catalog();

// Dispatch by name; throws BadParams for unknown names or wrong
// parameter counts.  `semidirect` is not constructible here (it needs
// structured arguments; see the group-spec grammar).
PermGroup builtin_group(const std::string& name, const std::vector<std::uint64_t>& params,
                        const Limits& lim = {});

}  // namespace cwcell
