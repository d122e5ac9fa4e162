#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "cwcell/perm.hpp"

namespace cwcell {

// Tag recording which named family a group came from, along with its
// parameters.  Builders attach it so downstream analysis can dispatch
// family-specific constructions; hand-entered generator lists carry no
// tag and always take the generic paths.
struct FamilyTag {
    std::string name;
    std::vector<std::uint64_t> params;
};

// Finite permutation group with a base and strong generating set,
// computed deterministically (Schreier-Sims) at construction.
//
// The stabilizer chain supports exact order, membership by sifting,
// lexicographic-by-chain element streaming, and uniform random
// sampling, all without materializing the element set.  Orbit points
// are stored in discovery order; per-level transversals keep either
// explicit coset representatives (small degree) or a Schreier tree
// from which representatives are rebuilt on demand (large degree), so
// groups on thousands of points stay affordable.
//
// Invariants checked by the test suite: the order equals the product
// of the transversal sizes, and rebuilding from any generator
// permutation of the same set yields the same order and membership
// relation.
class PermGroup {
  public:
    // Trivial group on `degree` points.
    explicit PermGroup(Point degree);
    PermGroup(Point degree, std::vector<Perm> generators);

    Point degree() const { return degree_; }
    std::uint64_t order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }
    const std::vector<Perm>& generators() const { return gens_; }

    bool contains(const Perm& g) const;
    // Residue of sifting g through the chain; identity iff member.
    Perm sift(const Perm& g) const;

    std::size_t base_length() const { return levels_.size(); }
    Point base_point(std::size_t i) const { return levels_[i].base; }
    std::uint64_t transversal_size(std::size_t i) const { return levels_[i].orbit.size(); }
    const std::vector<Point>& level_orbit(std::size_t i) const { return levels_[i].orbit; }
    // Representative u at chain level i with u(base_point(i)) == x.
    Perm transversal_rep(std::size_t i, Point x) const { return levels_[i].rep(x, degree_); }

    // Exactly uniform over the group: one transversal representative
    // per level, chosen independently.
    Perm random_element(std::mt19937_64& rng) const;

    // Streams every element exactly once, in the mixed-radix order of
    // the stabilizer chain.  Usage:
    //   for (auto it = g.elements(); !it.done(); it.next()) use(it.current());
    class ElementStream {
      public:
        const Perm& current() const { return current_; }
        bool done() const { return done_; }
        void next();

      private:
        friend class PermGroup;
        explicit ElementStream(const PermGroup& g);
        const PermGroup* g_;
        std::vector<std::uint32_t> digit_;
        std::vector<Perm> prefix_;  // prefix_[i] = u_0 * ... * u_i
        Perm current_;
        bool done_;
        void recompute_from(std::size_t level);
    };
    ElementStream elements() const { return ElementStream(*this); }

    // All elements as a vector; throws OrderExceedsLimit past `limit`.
    std::vector<Perm> element_list(std::uint64_t limit) const;

    const std::optional<FamilyTag>& tag() const { return tag_; }
    PermGroup with_tag(FamilyTag t) const;

  private:
    struct Level {
        Point base = 0;
        std::vector<Perm> gens;       // strong generators fixing earlier base points
        std::vector<Perm> tree_gens;  // gens plus shallowing powers, used by the tree
        std::vector<Point> orbit;     // discovery order, orbit[0] == base
        // Schreier tree: point -> (parent point, index into tree_gens);
        // the base maps to itself.
        std::vector<Point> parent;
        std::vector<std::uint32_t> via;
        // Explicit transversal, built only for small degrees.  cache[i]
        // is the representative for orbit[i].
        std::vector<Perm> cache;
        std::vector<std::uint32_t> slot;  // point -> index into orbit, or npos

        bool in_orbit(Point x) const { return slot[x] != UINT32_MAX; }
        Perm rep(Point x, Point degree) const;  // u with u(base) == x
    };

    Point degree_;
    std::vector<Perm> gens_;
    std::vector<Level> levels_;
    std::uint64_t order_ = 1;
    std::optional<FamilyTag> tag_;

    void build();
    void recompute_orbit(std::size_t li);
    void complete_level(std::size_t li);
    std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
};

// Subgroup together with the ambient group it lives in.  Generators
// are membership-checked against the parent at construction.
struct SubgroupHandle {
    PermGroup parent;
    PermGroup group;

    SubgroupHandle(PermGroup parent_group, std::vector<Perm> sub_generators);
    std::uint64_t index() const { return parent.order() / group.order(); }
};

}  // namespace cwcell
