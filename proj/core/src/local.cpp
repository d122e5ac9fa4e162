#include "cwcell/local.hpp"

#include <random>

#include "cwcell/families.hpp"
#include "cwcell/gf.hpp"

namespace cwcell {

bool is_p_group(const PermGroup& g, std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(p);
    std::uint64_t n = g.order();
    while (n % p == 0) n /= p;
    return n == 1;
}

namespace {

// p-part of an element: the power with order p^v(ord).
Perm p_element_part(const Perm& x, std::uint64_t p) {
    std::uint64_t ord = x.order();
    std::uint64_t rest = ord;
    while (rest % p == 0) rest /= p;
    Perm out = Perm::identity(x.degree());
    Perm base = x;
    for (std::uint64_t e = rest; e > 0; e >>= 1) {
        if (e & 1) out = out * base;
        base = base * base;
    }
    return out;
}

Perm coprime_part(const Perm& x, std::uint64_t p) {
    std::uint64_t ord = x.order();
    std::uint64_t ppow = p_part(ord, p);
    Perm out = Perm::identity(x.degree());
    Perm base = x;
    for (std::uint64_t e = ppow; e > 0; e >>= 1) {
        if (e & 1) out = out * base;
        base = base * base;
    }
    return out;
}

// Streams g, feeding each element that passes `keep` into an
// incrementally grown subgroup; the generating set that results is
// closed under conjugation whenever `keep` is.
std::vector<Perm> streamed_generators(const PermGroup& g, const Limits& lim,
                                      bool (*keep)(const Perm&, std::uint64_t),
                                      std::uint64_t p) {
    if (g.order() > lim.enum_limit) throw OrderExceedsLimit(g.order(), lim.enum_limit);
    std::vector<Perm> gens;
    PermGroup cur(g.degree());
    for (auto it = g.elements(); !it.done(); it.next()) {
        const Perm& e = it.current();
        if (!keep(e, p) || cur.contains(e)) continue;
        gens.push_back(e);
        cur = PermGroup(g.degree(), gens);
    }
    return gens;
}

bool order_exactly_p(const Perm& e, std::uint64_t p) { return e.order() == p; }
bool order_coprime_to_p(const Perm& e, std::uint64_t p) {
    return !e.is_identity() && e.order() % p != 0;
}

}  // namespace

SubgroupHandle omega1(const PermGroup& g, std::uint64_t p, const Limits& lim) {
    if (!is_prime(p)) throw NotPrime(p);
    return SubgroupHandle(g, streamed_generators(g, lim, order_exactly_p, p));
}

SubgroupHandle omega1_in_parent(const SubgroupHandle& h, std::uint64_t p, const Limits& lim) {
    if (!is_prime(p)) throw NotPrime(p);
    return SubgroupHandle(h.parent, streamed_generators(h.group, lim, order_exactly_p, p));
}

MaybeCertified omega1_radical(const PermGroup& g, std::uint64_t p, const Limits& lim,
                              std::uint64_t seed) {
    if (!is_prime(p)) throw NotPrime(p);
    if (g.order() <= lim.enum_limit) {
        // All order-p elements form a conjugation-stable generating
        // set, so the subgroup they generate is normal with no closure
        // pass.
        return {SubgroupHandle(g, streamed_generators(g, lim, order_exactly_p, p)), true};
    }
    // Sampling fallback: a lower bound only, never fed to certificates.
    std::mt19937_64 rng(seed);
    std::vector<Perm> seeds;
    PermGroup cur(g.degree());
    for (int i = 0; i < 512; ++i) {
        Perm x = g.random_element(rng);
        if (x.order() % p != 0) continue;
        Perm y = p_element_part(x, p);
        while (y.order() > p) {
            Perm z = y;
            for (std::uint64_t i = 1; i < p; ++i) z = z * y;
            y = z;  // y^p, one rung down the p-power ladder
        }
        if (y.order() == p && !cur.contains(y)) {
            seeds.push_back(y);
            cur = PermGroup(g.degree(), seeds);
        }
    }
    auto closure = normal_closure(g, seeds);
    return {std::move(closure), false};
}

MaybeCertified p_residual(const PermGroup& g, std::uint64_t p, const Limits& lim,
                          std::uint64_t seed) {
    if (!is_prime(p)) throw NotPrime(p);
    if (g.order() <= lim.enum_limit)
        return {SubgroupHandle(g, streamed_generators(g, lim, order_coprime_to_p, p)), true};
    std::mt19937_64 rng(seed);
    std::vector<Perm> seeds;
    PermGroup cur(g.degree());
    for (int i = 0; i < 512; ++i) {
        Perm y = coprime_part(g.random_element(rng), p);
        if (!y.is_identity() && !cur.contains(y)) {
            seeds.push_back(y);
            cur = PermGroup(g.degree(), seeds);
        }
    }
    auto closure = normal_closure(g, seeds);
    return {std::move(closure), false};
}

SubgroupHandle sylow_subgroup(const PermGroup& g, std::uint64_t p, const Limits& lim) {
    if (!is_prime(p)) throw NotPrime(p);
    std::uint64_t target = p_part(g.order(), p);
    if (target == 1) return SubgroupHandle(g, {});

    if (g.tag() && g.tag()->name == "symmetric" && p == 2)
        return SubgroupHandle(g, sylow2_symmetric_generators(g.tag()->params.at(0)));

    if (g.order() > lim.enum_limit) throw OrderExceedsLimit(g.order(), lim.enum_limit);

    // Seed with the p-part of the first element of order divisible by
    // p, then ascend: a proper p-subgroup grows inside its normalizer,
    // so some p-element of N(H) lies outside H and extends H to a
    // larger p-group.
    std::vector<Perm> gens;
    for (auto it = g.elements(); !it.done(); it.next()) {
        if (it.current().order() % p == 0) {
            gens.push_back(p_element_part(it.current(), p));
            break;
        }
    }
    SubgroupHandle h(g, gens);
    while (h.group.order() < target) {
        SubgroupHandle n = normalizer(g, h.group, lim);
        bool extended = false;
        for (auto it = n.group.elements(); !it.done(); it.next()) {
            const Perm& z = it.current();
            std::uint64_t o = z.order();
            if (o == 1 || p_part(o, p) != o || h.group.contains(z)) continue;
            h = extend_subgroup(h, {z});
            extended = true;
            break;
        }
        if (!extended) throw error("sylow ascent stalled below target order");
        if (p_part(h.group.order(), p) != h.group.order())
            throw error("sylow ascent left the p-group family");
    }
    return h;
}

}  // namespace cwcell
