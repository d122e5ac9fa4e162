#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cwcell/group_ops.hpp"
#include "cwcell/perm_group.hpp"
#include "cwcell/unitary.hpp"

namespace cwcell {

// The five properties a torsion-witness representation must satisfy.
// Each is re-derivable from the stored certificate data alone.
struct WitnessChecks {
    bool nontrivial_on_sylow = false;
    bool trivial_on_order_p = false;
    bool fusion_invariant_character = false;
    bool unitary = false;
    bool homomorphism_verified = false;

    bool all() const {
        return nontrivial_on_sylow && trivial_on_order_p && fusion_invariant_character &&
               unitary && homomorphism_verified;
    }
};

// A representation of N_G(S) that is nontrivial on the Sylow subgroup
// S, trivial on every order-p element, unitary, a verified
// homomorphism, and has character constant on G-fusion classes of S.
struct WitnessCertificate {
    std::uint64_t p;
    PermGroup group;            // ambient G
    SubgroupHandle sylow;       // S inside G
    SubgroupHandle normalizer;  // N_G(S) inside G
    UnitaryRep rep;             // defined on normalizer.group
    WitnessChecks checks;
    std::string provenance;
    double tolerance;
};

// Runs the five checks from scratch.  The representation source must
// be presented by exactly the normalizer's generator list.  Fusion
// classes of S-elements come from exact conjugacy classes of g when
// its order fits lim.enum_limit; beyond that, elements are bucketed
// by cycle type, a coarsening of conjugacy, so constancy on buckets
// still implies constancy on classes (the check can false-fail but
// never false-pass).
WitnessChecks run_checks(const PermGroup& g, const SubgroupHandle& sylow,
                         const SubgroupHandle& normalizer, const UnitaryRep& rep, std::uint64_t p,
                         double tol, const Limits& lim = {});
WitnessChecks run_checks(const WitnessCertificate& cert, const Limits& lim = {});

// Witness for Sz(q) at p = 2: the Borel subgroup N = N_G(S) maps onto
// the affine group AGL(1, q) with kernel the involution subgroup of
// S, and the sigma representation pulls back along that projection.
// q = 2^n, n odd, 3 <= n <= 13; table sizes cap q at 32.  Throws
// CheckFailed naming the first failing check.
WitnessCertificate suzuki_witness(std::uint64_t q, double tol = 1e-9, const Limits& lim = {});

// Witness for PSL2(q) with q = m * p^n + 1 at the odd prime p.  The
// Sylow p-subgroup is cyclic of order p^n with dihedral normalizer
// N of order 2p^n (this forces m = 2; other m are rejected), and the
// representation factors through the dihedral quotient of order 2p:
// the order-p^n generator maps to diag(w, conj(w)) with w a primitive
// p-th root of unity and the inverting involution to the coordinate
// swap.  Order-p elements land in the kernel exactly when n >= 2, so
// n = 1 is rejected up front.
WitnessCertificate psl2_witness(std::uint64_t p, std::uint32_t n, std::uint64_t m,
                                double tol = 1e-9, const Limits& lim = {});

// Family-agnostic search: K = normal closure in N = N_G(S) of the
// fusion closure of Omega_1(S).  If the image of S in N/K is trivial
// there is no witness of this shape and nullopt is returned.  The
// construction's semantics need fusion control by the normalizer, so
// FusionNotControlled is thrown when that fails (after the nullopt
// gate, which needs no such hypothesis).  Otherwise the regular
// representation of N/K lifted to N is checked and certified.
std::optional<WitnessCertificate> generic_quotient_witness(const PermGroup& g,
                                                           const SubgroupHandle& sylow,
                                                           std::uint64_t p, double tol = 1e-9,
                                                           const Limits& lim = {});

}  // namespace cwcell
