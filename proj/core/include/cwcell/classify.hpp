#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwcell/fusion.hpp"
#include "cwcell/group_ops.hpp"
#include "cwcell/perm_group.hpp"
#include "cwcell/witness.hpp"

namespace cwcell {

enum class Branch { Aspherical, TorsionFree, Torsion, Unknown };

// Stable lowercase names used by the JSON report.
const char* branch_name(Branch b);

struct ReductionStage {
    std::string stage;  // "input" or "order_p_radical"
    std::uint64_t order;
};

struct ClassifyOptions {
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    Limits limits{};
};

// Outcome of the ordered branch tests, together with everything needed
// to re-check it without re-running the searches: the reduced group's
// generators, the Sylow subgroup, conjugator witnesses for the fusion
// criterion, or a full witness certificate.
struct TrichotomyVerdict {
    Branch branch = Branch::Unknown;
    std::uint64_t p = 0;
    std::vector<ReductionStage> reduction;
    // True when every step that fed the verdict ran in the exact tier.
    bool certified = false;

    // Aspherical: "trivial_p_part" or "reduced_to_p_group".
    std::string aspherical_reason;
    // Subgroup of the input generated by its order-p elements; absent
    // when p does not divide the order or the reduction was skipped.
    std::optional<SubgroupHandle> reduced;

    // TorsionFree payload.
    std::optional<char> criterion;  // 'A': Sylow generated by order-p
                                    // elements; 'B': fusion closure
                                    // generates the Sylow subgroup
    std::vector<std::uint64_t> primes;  // primes q != p dividing the reduced order
    std::optional<SubgroupHandle> sylow;
    std::uint64_t omega_order = 0;    // order of the subgroup generated
                                      // by the Sylow's order-p elements
    std::uint64_t closure_order = 0;  // order of the fusion closure, when computed
    std::vector<FusedElement> fused;  // criterion B conjugator witnesses

    // Torsion payload.
    std::optional<WitnessCertificate> witness;

    // Unknown payload: which hypotheses failed or were unverifiable.
    std::vector<std::string> diagnostics;
    // Non-fatal observations on any branch.
    std::vector<std::string> notes;

    std::string fundamental_group_note;
    // Set on the branches where it is determined: for a reduced group
    // that is not a p-group, the completed classifying space is built
    // from mod-p pieces exactly in the torsion-free case.
    std::optional<bool> cellularity_of_completion;

    double tolerance = 1e-9;
    std::uint64_t seed = 0;
};

// Ordered decision procedure.  Branches are mutually exclusive: the
// first test that resolves wins.
//   1. p does not divide |G|: Aspherical (trivial p-part).
//   2. Reduce to G1, the normal subgroup generated by order-p elements.
//   3. G1 a p-group: Aspherical.
//   4. Sylow p-subgroup of G1 generated by its order-p elements:
//      TorsionFree via criterion A.
//   5. Fusion closure generates the Sylow subgroup: TorsionFree via
//      criterion B, with stored conjugators.
//   6. Witness search: the registered family construction when the
//      input carries a matching family tag, else the generic quotient
//      route: Torsion with a five-check certificate.
//   7. Otherwise Unknown, with diagnostics.
// Resource-limit errors never produce a wrong branch; they surface as
// Unknown with certified = false.  A passing family witness is
// self-contained, so it is still attempted when the reduction itself
// exceeded the enumeration limit.
// Deterministic for fixed (generators, p, options).
TrichotomyVerdict classify(const PermGroup& g, std::uint64_t p, const ClassifyOptions& opt = {});

// Re-checks a verdict against the group it was issued for, re-running
// only the recorded checks (memberships, orders, conjugations, the
// witness's five checks), never the searches.  Recorded elements that
// fail membership in their parent raise StaleCertificate; any other
// mismatch returns false.  Unknown verdicts carry no claims and
// re-verify vacuously.
bool reverify(const TrichotomyVerdict& v, const PermGroup& g, std::uint64_t p,
              const Limits& lim = {});

}  // namespace cwcell
