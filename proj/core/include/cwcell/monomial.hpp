#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace cwcell {

// Unitary monomial matrix: one nonzero entry per row and column, each
// a root of unity.  Column j carries exp(2*pi*i*phase(j)/root_order())
// at row row(j).  Phases are exponents in Z/root_order, so products,
// adjoints, and equality are exact integer arithmetic; floating point
// enters only through traces, norms, and the dense realization.
class Monomial {
  public:
    Monomial(std::uint32_t dim, std::uint32_t root_order);  // identity
    Monomial(std::uint32_t root_order, std::vector<std::uint32_t> rows,
             std::vector<std::uint32_t> phases);

    std::uint32_t dim() const { return static_cast<std::uint32_t>(row_.size()); }
    std::uint32_t root_order() const { return order_; }
    std::uint32_t row(std::uint32_t col) const { return row_[col]; }
    std::uint32_t phase(std::uint32_t col) const { return phase_[col]; }

    bool is_identity() const;
    bool operator==(const Monomial& o) const;
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // Matrix product; operands must share dim and root order.
    Monomial operator*(const Monomial& o) const;
    Monomial adjoint() const;
    // Same matrix re-encoded over a multiple of the current root order.
    Monomial rescaled(std::uint32_t new_order) const;

    std::complex<double> entry(std::uint32_t col) const;
    std::complex<double> trace() const;
    // Row-major dense realization.
    std::vector<std::complex<double>> dense() const;

  private:
    std::uint32_t order_;
    std::vector<std::uint32_t> row_;
    std::vector<std::uint32_t> phase_;
};

// Frobenius norm of a - b, computed over the nonzero positions only.
// Works across differing root orders.
double frobenius_distance(const Monomial& a, const Monomial& b);

// Max-norm distance of m * adjoint(m) from the identity, evaluated
// numerically.  Structurally this is always at floating-point noise
// level; it is computed rather than asserted so certificates report a
// measured quantity.
double unitary_defect(const Monomial& m);

}  // namespace cwcell
