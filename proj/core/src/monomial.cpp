#include "cwcell/monomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cwcell/errors.hpp"

namespace cwcell {

Monomial::Monomial(std::uint32_t dim, std::uint32_t root_order)
    : order_(root_order), row_(dim), phase_(dim, 0) {
    if (root_order == 0) throw BadParams("monomial root order must be positive");
    for (std::uint32_t j = 0; j < dim; ++j) row_[j] = j;
}

Monomial::Monomial(std::uint32_t root_order, std::vector<std::uint32_t> rows,
                   std::vector<std::uint32_t> phases)
    : order_(root_order), row_(std::move(rows)), phase_(std::move(phases)) {
    if (root_order == 0) throw BadParams("monomial root order must be positive");
    if (row_.size() != phase_.size()) throw BadParams("monomial row/phase length mismatch");
    std::vector<bool> hit(row_.size(), false);
    for (std::uint32_t r : row_) {
        if (r >= row_.size() || hit[r]) throw BadParams("monomial rows are not a permutation");
        hit[r] = true;
    }
    for (auto& p : phase_) p %= order_;
}

bool Monomial::is_identity() const {
    for (std::uint32_t j = 0; j < dim(); ++j)
        if (row_[j] != j || phase_[j] != 0) return false;
    return true;
}

bool Monomial::operator==(const Monomial& o) const {
    return order_ == o.order_ && row_ == o.row_ && phase_ == o.phase_;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (dim() != o.dim()) throw DegreeMismatch(dim(), o.dim());
    if (order_ != o.order_) throw BadParams("monomial root orders differ; rescale first");
    std::vector<std::uint32_t> r(dim()), p(dim());
    for (std::uint32_t j = 0; j < dim(); ++j) {
        std::uint32_t mid = o.row_[j];
        r[j] = row_[mid];
        p[j] = (o.phase_[j] + phase_[mid]) % order_;
    }
    return Monomial(order_, std::move(r), std::move(p));
}

Monomial Monomial::adjoint() const {
    std::vector<std::uint32_t> r(dim()), p(dim());
    for (std::uint32_t j = 0; j < dim(); ++j) {
        r[row_[j]] = j;
        p[row_[j]] = (order_ - phase_[j]) % order_;
    }
    return Monomial(order_, std::move(r), std::move(p));
}

Monomial Monomial::rescaled(std::uint32_t new_order) const {
    if (new_order == 0 || new_order % order_ != 0)
        throw BadParams("rescale target must be a positive multiple of the root order");
    std::uint32_t factor = new_order / order_;
    Monomial out(new_order, row_, phase_);
    for (auto& p : out.phase_) p *= factor;
    return out;
}

std::complex<double> Monomial::entry(std::uint32_t col) const {
    return std::polar(1.0, 2.0 * std::numbers::pi * phase_[col] / order_);
}

std::complex<double> Monomial::trace() const {
    std::complex<double> t = 0;
    for (std::uint32_t j = 0; j < dim(); ++j)
        if (row_[j] == j) t += entry(j);
    return t;
}

std::vector<std::complex<double>> Monomial::dense() const {
    std::vector<std::complex<double>> m(static_cast<std::size_t>(dim()) * dim());
    for (std::uint32_t j = 0; j < dim(); ++j) m[static_cast<std::size_t>(row_[j]) * dim() + j] = entry(j);
    return m;
}

double frobenius_distance(const Monomial& a, const Monomial& b) {
    if (a.dim() != b.dim()) throw DegreeMismatch(a.dim(), b.dim());
    double sq = 0;
    for (std::uint32_t j = 0; j < a.dim(); ++j) {
        if (a.row(j) == b.row(j)) {
            sq += std::norm(a.entry(j) - b.entry(j));
        } else {
            sq += std::norm(a.entry(j)) + std::norm(b.entry(j));
        }
    }
    return std::sqrt(sq);
}

double unitary_defect(const Monomial& m) {
    // m * adjoint(m) has its off-diagonal entries structurally zero, so
    // the defect is the diagonal deviation |entry * conj(entry) - 1|.
    double worst = 0;
    for (std::uint32_t j = 0; j < m.dim(); ++j) {
        auto e = m.entry(j);
        worst = std::max(worst, std::abs(e * std::conj(e) - std::complex<double>(1.0)));
    }
    return worst;
}

}  // namespace cwcell
