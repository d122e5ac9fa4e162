#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cwcell/errors.hpp"

namespace cwcell {

using Point = std::uint32_t;

// Permutation of {0, ..., degree-1}, stored as its image vector.
// Composition follows function application: (a * b)(x) = a(b(x)), so
// matrix representations satisfy M(a * b) = M(a) M(b).
//
// Text form uses 1-based disjoint cycles, e.g. "(1 2)(3 4 5)"; the
// identity prints as "()".
class Perm {
  public:
    explicit Perm(Point degree);                // identity
    explicit Perm(std::vector<Point> images);   // validated bijection

    static Perm identity(Point degree) { return Perm(degree); }

    Point degree() const { return static_cast<Point>(img_.size()); }
    Point operator()(Point x) const { return img_[x]; }
    const std::vector<Point>& images() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;
    std::uint64_t order() const;    // lcm of cycle lengths

    // g * (*this) * g^{-1}
    Perm conjugated_by(const Perm& g) const;

    // Nontrivial cycles; each starts at its smallest point, cycles sorted
    // by starting point.
    std::vector<std::vector<Point>> cycles() const;
    // Lengths of nontrivial cycles, descending.  Invariant under
    // conjugation in the full symmetric group.
    std::vector<Point> cycle_type() const;

    std::string cycle_string() const;
    static Perm parse_cycles(Point degree, const std::string& text);

    friend Perm operator*(const Perm& a, const Perm& b);
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const;

  private:
    std::vector<Point> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const;
};

}  // namespace cwcell
