#include "cwcell/gf.hpp"

namespace cwcell {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t part = 1;
    while (n % p == 0) {
        n /= p;
        part *= p;
    }
    return part;
}

bool prime_power(std::uint64_t q, std::uint64_t& r, std::uint32_t& e) {
    if (q < 2) return false;
    auto fs = prime_factors(q);
    if (fs.size() != 1) return false;
    r = fs[0];
    e = 0;
    for (std::uint64_t t = q; t > 1; t /= r) ++e;
    return true;
}

namespace {

// Multiplies the residue polynomial coded by `a` by x, modulo the
// monic polynomial x^k + (digits of poly_code).
std::uint32_t mulx(std::uint32_t a, std::uint32_t p, std::uint32_t k, std::uint32_t q,
                   std::uint32_t poly_code) {
    std::uint32_t pk1 = q / p;  // p^(k-1)
    std::uint32_t high = a / pk1;
    std::uint32_t shifted = (a - high * pk1) * p;
    if (high == 0) return shifted;
    // x^k = -(low part of the modulus); subtract high * poly digitwise.
    std::uint32_t result = 0;
    std::uint32_t mult = 1;
    std::uint32_t s = shifted, m = poly_code;
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint32_t ds = s % p, dm = m % p;
        std::uint32_t d = (ds + (p - (high * dm) % p)) % p;
        result += d * mult;
        mult *= p;
        s /= p;
        m /= p;
    }
    return result;
}

// Multiplicative order of x in the quotient ring, or 0 if a power of x
// hits zero or never returns to 1 (the modulus then cannot be
// primitive).
std::uint32_t order_of_x(std::uint32_t p, std::uint32_t k, std::uint32_t q,
                         std::uint32_t poly_code) {
    std::uint32_t t = p;
    for (std::uint32_t e = 1; e <= q; ++e) {
        // invariant: t == x^e
        if (t == 0) return 0;
        if (t == 1) return e;
        t = mulx(t, p, k, q, poly_code);
    }
    return 0;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    if (!is_prime(p)) throw NotPrime(p);
    if (k == 0) throw BadParams("field extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > 65536) throw SizeExceeded("field size beyond 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);

    if (k_ == 1) {
        // Smallest constant c with -c a generator of (Z/p)*.
        auto unit_order = [&](std::uint32_t g) {
            std::uint32_t t = g % p_, ord = 1;
            while (t != 1) {
                t = static_cast<std::uint32_t>((static_cast<std::uint64_t>(t) * g) % p_);
                ++ord;
            }
            return ord;
        };
        std::uint32_t gen = 0;
        for (std::uint32_t c = 0; c < p_; ++c) {
            std::uint32_t root = (p_ - c) % p_;
            if (root != 0 && unit_order(root) == p_ - 1) {
                poly_code_ = c;
                gen = root;
                break;
            }
        }
        exp_.assign(q_ - 1, 1);
        log_.assign(q_, 0);
        std::uint32_t t = 1;
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
            exp_[i] = t;
            log_[t] = i;
            t = static_cast<std::uint32_t>((static_cast<std::uint64_t>(t) * gen) % p_);
        }
        return;
    }

    poly_code_ = q_;  // sentinel: not found yet
    for (std::uint32_t m = 0; m < q_; ++m) {
        if (order_of_x(p_, k_, q_, m) == q_ - 1) {
            poly_code_ = m;
            break;
        }
    }
    if (poly_code_ == q_) throw error("no primitive polynomial found");

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::uint32_t t = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = t;
        log_[t] = i;
        t = mulx(t, p_, k_, q_, poly_code_);
    }
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t result = 0, mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        result += ((a % p_ + b % p_) % p_) * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return result;
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t result = 0, mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        result += ((p_ - a % p_) % p_) * mult;
        mult *= p_;
        a /= p_;
    }
    return result;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw BadParams("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw BadParams("negative power of zero");
        return e == 0 ? 1u : 0u;
    }
    std::int64_t m = q_ - 1;
    std::int64_t r = ((e % m) + m) % m;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r)) % (q_ - 1)];
}

std::uint32_t Field::dlog(std::uint32_t a) const {
    if (a == 0) throw BadParams("discrete log of zero");
    return log_[a];
}

std::uint32_t Field::trace(std::uint32_t a) const {
    std::uint32_t t = a, sum = a;
    for (std::uint32_t i = 1; i < k_; ++i) {
        t = frobenius(t);
        sum = add(sum, t);
    }
    return sum;
}

}  // namespace cwcell
