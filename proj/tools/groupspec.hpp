#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cwcell/families.hpp"
#include "cwcell/perm.hpp"
#include "cwcell/perm_group.hpp"

namespace cwcell::tool {

// Parsed form of the textual group grammar:
//   builtin:<name>[:<uint>]*
//   perm:<degree>:<cycles>[,<cycles>]*
//   semidirect:{<spec>}:{<spec>}:{<action>}
// Cycle notation is 1-based and whitespace-insensitive; "()" is the
// identity.  The semidirect action lists, for each generator of the
// second factor K, the images of the first factor H's generators as
// elements of H: H-images separated by commas, K-blocks by semicolons.
struct GroupSpec {
    enum class Kind { Builtin, Perm, Semidirect };
    Kind kind = Kind::Builtin;

    std::string name;                   // builtin
    std::vector<std::uint64_t> params;  // builtin

    std::uint32_t degree = 0;      // perm
    std::vector<Perm> generators;  // perm

    std::vector<GroupSpec> factors;         // semidirect: H then K
    std::vector<std::vector<Perm>> action;  // semidirect: action[k][h]

    // Canonical text; parse(render(s)) reproduces s.
    std::string render() const;
    PermGroup build(const Limits& lim = {}) const;
};

// Throws ParseError with a position into `text`.  Semidirect factor
// groups are built during parsing to resolve their degrees and
// generator counts, so family errors (BadParams and friends) can also
// surface here.
GroupSpec parse_group_spec(const std::string& text, const Limits& lim = {});

}  // namespace cwcell::tool
