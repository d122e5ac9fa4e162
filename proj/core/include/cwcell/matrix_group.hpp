#pragma once

#include <cstdint>
#include <vector>

#include "cwcell/gf.hpp"
#include "cwcell/group_ops.hpp"
#include "cwcell/perm_group.hpp"

namespace cwcell {

// Row-major dim x dim matrix over a Field, entries as field codes.
using Mat = std::vector<std::uint32_t>;

Mat mat_identity(std::uint32_t dim);
Mat mat_mul(const Field& f, std::uint32_t dim, const Mat& a, const Mat& b);
std::vector<std::uint32_t> mat_apply(const Field& f, std::uint32_t dim, const Mat& m,
                                     const std::vector<std::uint32_t>& v);
bool mat_invertible(const Field& f, std::uint32_t dim, const Mat& m);

struct MatrixGroupSpec {
    Field field;
    std::uint32_t dim;
    std::vector<Mat> gens;
};

enum class MatrixAction {
    // All points of PG(dim-1, q); scalar kernel is quotiented away by
    // the action itself.
    ProjectivePoints,
    // Orbit of the projective point (0 : ... : 0 : 1) under the
    // generators; closed by construction.
    Ovoid,
    // Left-regular action on the matrix group's own elements,
    // enumerated by closure (bounded by enum_limit).
    Cosets,
};

// Permutation group induced by a matrix group on the chosen point set.
// Generators must be invertible (else ActionNotClosed).  When
// `require_faithful` is set, a generator that is not projectively
// scalar yet acts as the identity raises ActionNotFaithful; PSL-style
// quotients pass false because killing the scalars is the point.
PermGroup matrix_to_perm(const MatrixGroupSpec& spec, MatrixAction action,
                         bool require_faithful = true, const Limits& lim = {});

// The point set underlying each action, as packed coordinate codes (16
// bits per coordinate, coordinate 0 in the low bits), in the exact
// order matrix_to_perm numbers them.  Cosets mode returns element
// indices only, so it is not exposed here.
std::vector<std::uint64_t> matrix_action_points(const MatrixGroupSpec& spec, MatrixAction action);

// Permutation induced by a single matrix on a fixed packed point list
// (projective convention, as produced by matrix_action_points).  The
// matrix must map the set onto itself, else ActionNotClosed.
Perm matrix_perm_on_points(const Field& f, std::uint32_t dim, const Mat& m,
                           const std::vector<std::uint64_t>& pts);

}  // namespace cwcell
