#pragma once

#include <cstdint>
#include <vector>

#include "cwcell/errors.hpp"

namespace cwcell {

// GF(p^k) with q = p^k <= 2^16, as exp/log tables over a primitive
// polynomial.
//
// Elements are encoded as integers in [0, q): the base-p digits of the
// code are the coefficients of the residue polynomial, so 0 and 1 are
// the field's zero and one and codes < p form the prime subfield.  The
// defining polynomial is the first monic degree-k polynomial, in
// increasing order of its coefficient code, whose root x is a
// generator of the multiplicative group; this makes every table
// bit-for-bit reproducible.  For GF(8) the choice lands on
// x^3 = x + 1.
class Field {
  public:
    Field(std::uint32_t p, std::uint32_t k);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t modulus_code() const { return poly_code_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

    // Root of the defining polynomial; generates the unit group.
    std::uint32_t primitive() const { return k_ == 1 ? exp_[1] : p_; }
    // Discrete log base primitive(); a must be nonzero.
    std::uint32_t dlog(std::uint32_t a) const;

    std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }
    // a + a^p + ... + a^(p^(k-1)), always in the prime subfield.
    std::uint32_t trace(std::uint32_t a) const;

  private:
    std::uint32_t p_, k_, q_;
    std::uint32_t poly_code_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = primitive^i, length q-1
    std::vector<std::uint32_t> log_;  // inverse table, log_[0] unused

    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;  // polynomial arithmetic
};

bool is_prime(std::uint64_t n);
// Prime factors of n in increasing order, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
// Decomposes q as r^e with r prime, if possible.
bool prime_power(std::uint64_t q, std::uint64_t& r, std::uint32_t& e);

}  // namespace cwcell
