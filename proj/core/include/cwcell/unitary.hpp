#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cwcell/conjugacy.hpp"
#include "cwcell/group_ops.hpp"
#include "cwcell/monomial.hpp"
#include "cwcell/perm_group.hpp"

namespace cwcell {

// Homomorphism from a permutation group to the root_order-th roots of
// unity, stored as an exponent per element.  Construction walks the
// whole group and checks every generator edge, so a successfully
// built character is verified on all of the source.  Sources are
// capped at 10^4 elements.
class LinearCharacter {
  public:
    static constexpr std::uint64_t kSourceLimit = 10'000;

    LinearCharacter(const PermGroup& source, std::uint32_t root_order,
                    const std::vector<std::uint32_t>& gen_exponents);

    const PermGroup& source() const { return source_; }
    std::uint32_t root_order() const { return order_; }
    bool trivial() const;

    std::uint32_t exponent(const Perm& x) const;  // NonMember outside the source
    std::optional<std::uint32_t> try_exponent(const Perm& x) const;
    std::complex<double> value(const Perm& x) const;

  private:
    PermGroup source_;
    std::uint32_t order_;
    std::unordered_map<Perm, std::uint32_t, PermHash> exp_;
};

// Monomial unitary representation of a permutation group.  Sources of
// order at most kTableLimit get a full image table; larger sources
// supply a closed-form evaluator alongside the generator images.
// Generator root orders are unified to their lcm at construction.
class UnitaryRep {
  public:
    static constexpr std::uint64_t kTableLimit = 10'000;

    // Full-table mode; throws SizeExceeded past kTableLimit.
    UnitaryRep(const PermGroup& source, std::vector<Monomial> gen_images);
    // Evaluator mode; the evaluator must already agree with gen_images
    // on the generators (checked).
    UnitaryRep(const PermGroup& source, std::vector<Monomial> gen_images,
               std::function<Monomial(const Perm&)> evaluator);

    const PermGroup& source() const { return source_; }
    std::uint32_t dimension() const { return gen_images_.empty() ? 1 : gen_images_[0].dim(); }
    std::uint32_t root_order() const { return order_; }
    const std::vector<Monomial>& generator_images() const { return gen_images_; }
    bool table_mode() const { return !table_.empty(); }

    Monomial image(const Perm& x) const;

    // Max Frobenius distance between image(x*y) and image(x)*image(y).
    // All pairs when the source has at most kPairLimit elements, else
    // one check per (element, generator) edge, which still forces the
    // homomorphism property on the whole group by induction on word
    // length.  Sources beyond lim.enum_limit get seeded random pairs
    // only; `complete`, when given, reports which tier ran.
    static constexpr std::uint64_t kPairLimit = 2000;
    double homomorphism_defect(const Limits& lim = {}, bool* complete = nullptr,
                               std::uint64_t seed = 0) const;

    // Max unitary defect over generator images and, in table mode, all
    // stored images.
    double max_unitary_defect() const;

    // Whether all stored images are distinct; table mode only.
    bool faithful() const;

  private:
    PermGroup source_;
    std::uint32_t order_;
    std::vector<Monomial> gen_images_;
    std::function<Monomial(const Perm&)> eval_;
    std::unordered_map<Perm, std::uint32_t, PermHash> index_;
    std::vector<Monomial> table_;

    void unify_orders();
};

// Class function given by the trace of a representation.
struct Character {
    std::vector<std::complex<double>> values;  // indexed by class id
    std::uint32_t dimension = 0;
};

// Trace of the representation at each class representative; the
// representatives must lie in the representation's source.
Character character(const UnitaryRep& rep, const ConjugacyClasses& classes);

// Representation of n induced from a linear character of the abelian
// normal subgroup a (chi's source must be a.group, and a.parent must
// be n).  The transversal is built breadth-first from the identity,
// so when n/a is generated by the image of one generator the
// transversal is its power sequence; golden tests rely on that.
// Index capped at 64.
UnitaryRep induced_rep(const PermGroup& n, const SubgroupHandle& a, const LinearCharacter& chi,
                       const Limits& lim = {});

// Faithful monomial representation of the affine group AGL(1, 2^n) of
// dimension 2^n - 1, induced from the trace character of the
// translation subgroup.  For n <= 5 this literally runs induced_rep;
// past the index cap it switches to the closed-form evaluator, which
// agrees with induced_rep where both are defined.  n odd, 3..13.
UnitaryRep suzuki_sigma(std::uint32_t n, const Limits& lim = {});

}  // namespace cwcell
