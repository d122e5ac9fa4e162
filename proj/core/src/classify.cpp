#include "cwcell/classify.hpp"

#include <algorithm>
#include <utility>

#include "cwcell/errors.hpp"
#include "cwcell/gf.hpp"
#include "cwcell/local.hpp"

namespace cwcell {

namespace {

// Every prime factor of a permutation group order is at most the
// degree (a Cauchy element of prime order q needs a q-cycle), so trial
// division never runs far.
std::vector<std::uint64_t> prime_divisors_except(std::uint64_t n, std::uint64_t p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        if (d != p) out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1 && n != p) out.push_back(n);
    return out;
}

// Runs a step, converting resource-limit errors into diagnostics so
// the caller can continue with whatever later steps remain sound.
template <typename Fn>
bool guarded(TrichotomyVerdict& v, const char* what, Fn&& fn) {
    try {
        fn();
        return true;
    } catch (const OrderExceedsLimit& e) {
        v.diagnostics.push_back(std::string(what) + ": " + e.what());
    } catch (const IndexExceedsLimit& e) {
        v.diagnostics.push_back(std::string(what) + ": " + e.what());
    } catch (const SizeExceeded& e) {
        v.diagnostics.push_back(std::string(what) + ": " + e.what());
    }
    return false;
}

constexpr const char* kNoteTrivial =
    "no elements of order p: the cellular approximation is contractible and has trivial "
    "fundamental group";
constexpr const char* kNotePGroup =
    "the cellular approximation is the classifying space of the reduced p-group";
constexpr const char* kNoteExtension =
    "the fundamental group of the cellular approximation is an extension of the reduced group "
    "by a finite abelian kernel without p-torsion; the kernel is not computed";

std::optional<WitnessCertificate> family_witness(const PermGroup& g, std::uint64_t p,
                                                const ClassifyOptions& opt,
                                                TrichotomyVerdict& v) {
    if (!g.tag()) return std::nullopt;
    const FamilyTag& tag = *g.tag();
    try {
        if (tag.name == "suzuki" && p == 2 && tag.params.size() == 1)
            return suzuki_witness(tag.params[0], opt.tolerance, opt.limits);
        if (tag.name == "psl2" && p % 2 == 1 && tag.params.size() == 1 && tag.params[0] >= 2) {
            std::uint64_t m = tag.params[0] - 1;
            std::uint32_t n = 0;
            while (m > 0 && m % p == 0) {
                m /= p;
                ++n;
            }
            // with only one factor of p the representation would be
            // faithful on the order-p elements, so the family does not
            // apply
            if (n >= 2) return psl2_witness(p, n, m, opt.tolerance, opt.limits);
        }
    } catch (const BadParams& e) {
        v.diagnostics.push_back(std::string("family witness: ") + e.what());
    } catch (const SizeExceeded& e) {
        v.diagnostics.push_back(std::string("family witness: ") + e.what());
    } catch (const CheckFailed& e) {
        v.diagnostics.push_back(std::string("family witness: ") + e.what());
    }
    return std::nullopt;
}

// Membership-checked rebuild of a recorded subgroup inside its parent.
PermGroup rebuild_inside(const PermGroup& parent, const PermGroup& recorded, const char* what) {
    if (recorded.degree() != parent.degree())
        throw StaleCertificate(std::string(what) + ": degree mismatch");
    for (const Perm& x : recorded.generators())
        if (!parent.contains(x)) throw StaleCertificate(std::string(what) + ": generator escapes parent");
    return PermGroup(parent.degree(), recorded.generators());
}

}  // namespace

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Aspherical: return "aspherical";
        case Branch::TorsionFree: return "torsion_free";
        case Branch::Torsion: return "torsion";
        case Branch::Unknown: return "unknown";
    }
    return "unknown";
}

TrichotomyVerdict classify(const PermGroup& g, std::uint64_t p, const ClassifyOptions& opt) {
    if (!is_prime(p)) throw NotPrime(p);
    TrichotomyVerdict v;
    v.p = p;
    v.tolerance = opt.tolerance;
    v.seed = opt.seed;
    v.reduction.push_back({"input", g.order()});

    if (g.order() % p != 0) {
        v.branch = Branch::Aspherical;
        v.aspherical_reason = "trivial_p_part";
        v.fundamental_group_note = kNoteTrivial;
        v.certified = true;
        return v;
    }
    v.fundamental_group_note = kNoteExtension;

    bool reduced_ok = guarded(v, "order-p radical", [&] {
        MaybeCertified rad = omega1_radical(g, p, opt.limits, opt.seed);
        if (!rad.certified) throw OrderExceedsLimit(g.order(), opt.limits.enum_limit);
        v.reduced = std::move(rad.sub);
    });

    if (reduced_ok) {
        const PermGroup& g1 = v.reduced->group;
        v.reduction.push_back({"order_p_radical", g1.order()});
        if (is_p_group(g1, p)) {
            v.branch = Branch::Aspherical;
            v.aspherical_reason = "reduced_to_p_group";
            v.fundamental_group_note = kNotePGroup;
            v.certified = true;
            return v;
        }
        v.primes = prime_divisors_except(g1.order(), p);

        bool sylow_ok = guarded(v, "sylow subgroup", [&] {
            v.sylow = sylow_subgroup(g1, p, opt.limits);
        });
        if (sylow_ok) {
            bool a_known = guarded(v, "order-p part of the sylow subgroup", [&] {
                v.omega_order = omega1(v.sylow->group, p, opt.limits).group.order();
            });
            if (a_known && v.omega_order == v.sylow->group.order()) {
                v.branch = Branch::TorsionFree;
                v.criterion = 'A';
                v.certified = true;
                v.cellularity_of_completion = true;
                return v;
            }
            if (a_known) {
                bool b_holds = false;
                bool b_known = guarded(v, "fusion closure", [&] {
                    FusionReport fr = fusion_closure(g1, *v.sylow, p, opt.limits);
                    v.closure_order = fr.closure.group.order();
                    v.fused = std::move(fr.fused);
                    b_holds = fr.closure_generates;
                });
                if (b_known && b_holds) {
                    v.branch = Branch::TorsionFree;
                    v.criterion = 'B';
                    v.certified = true;
                    v.cellularity_of_completion = true;
                    return v;
                }
                if (b_known)
                    v.notes.push_back("fusion closure is a proper subgroup of the sylow subgroup");
                v.fused.clear();
            }
        }
    }

    // Torsion hunt.  The family construction certifies itself from
    // scratch, so it may run even when the reduction was skipped for
    // size; it only applies when the whole group is the reduced group.
    std::optional<WitnessCertificate> cert;
    if (!v.reduced || v.reduced->group.order() == g.order()) {
        cert = family_witness(g, p, opt, v);
        if (cert && !v.reduced)
            v.notes.push_back("reduction skipped; the family witness certifies torsion directly");
    }
    if (!cert && v.reduced && v.sylow) {
        guarded(v, "generic quotient witness", [&] {
            try {
                cert = generic_quotient_witness(v.reduced->group, *v.sylow, p, opt.tolerance,
                                                opt.limits);
            } catch (const FusionNotControlled& e) {
                v.diagnostics.push_back(std::string("generic quotient witness: ") + e.what());
            } catch (const CheckFailed& e) {
                v.diagnostics.push_back(std::string("generic quotient witness: ") + e.what());
            }
        });
    }
    if (cert) {
        v.branch = Branch::Torsion;
        v.witness = std::move(cert);
        v.certified = true;
        v.cellularity_of_completion = false;
        return v;
    }

    if (v.diagnostics.empty())
        v.diagnostics.push_back("no torsion witness found; the sufficient conditions are exhausted");
    v.branch = Branch::Unknown;
    v.certified = false;
    return v;
}

bool reverify(const TrichotomyVerdict& v, const PermGroup& g, std::uint64_t p,
              const Limits& lim) {
    if (v.p != p) return false;
    if (v.reduction.empty() || v.reduction.front().stage != "input" ||
        v.reduction.front().order != g.order())
        return false;

    switch (v.branch) {
        case Branch::Unknown:
            // carries no claims; a certified flag would be one
            return !v.certified;

        case Branch::Aspherical: {
            if (v.aspherical_reason == "trivial_p_part") return g.order() % p != 0;
            if (v.aspherical_reason != "reduced_to_p_group" || !v.reduced) return false;
            PermGroup g1 = rebuild_inside(g, v.reduced->group, "reduced group");
            if (v.reduction.size() < 2 || g1.order() != v.reduction[1].order) return false;
            return is_p_group(g1, p);
        }

        case Branch::TorsionFree: {
            if (!v.reduced || !v.sylow || !v.criterion) return false;
            PermGroup g1 = rebuild_inside(g, v.reduced->group, "reduced group");
            if (v.reduction.size() < 2 || g1.order() != v.reduction[1].order) return false;
            PermGroup s = rebuild_inside(g1, v.sylow->group, "sylow subgroup");
            if (s.order() != p_part(g1.order(), p)) return false;
            if (v.primes != prime_divisors_except(g1.order(), p)) return false;
            SubgroupHandle om = omega1(s, p, lim);
            if (om.group.order() != v.omega_order) return false;
            if (*v.criterion == 'A') return v.omega_order == s.order();
            if (*v.criterion != 'B' || v.fused.empty()) return false;
            std::vector<Perm> closure_gens;
            closure_gens.reserve(v.fused.size());
            for (const FusedElement& fe : v.fused) {
                if (!s.contains(fe.element))
                    throw StaleCertificate("fused element outside the recorded sylow subgroup");
                if (!g1.contains(fe.conjugator))
                    throw StaleCertificate("conjugator outside the reduced group");
                if (!om.group.contains(fe.element.conjugated_by(fe.conjugator))) return false;
                closure_gens.push_back(fe.element);
            }
            return PermGroup(g.degree(), closure_gens).order() == s.order();
        }

        case Branch::Torsion: {
            if (!v.witness) return false;
            const WitnessCertificate& c = *v.witness;
            if (c.p != p) return false;
            // The certificate names its own copy of the group; tie it
            // to the classified group (or its recorded reduction) by
            // mutual membership.
            std::optional<PermGroup> g1;
            const PermGroup* target = &g;
            if (v.reduced) {
                g1 = rebuild_inside(g, v.reduced->group, "reduced group");
                target = &*g1;
            }
            if (c.group.degree() != target->degree())
                throw StaleCertificate("witness group: degree mismatch");
            for (const Perm& x : c.group.generators())
                if (!target->contains(x))
                    throw StaleCertificate("witness group generator escapes the classified group");
            for (const Perm& x : target->generators())
                if (!c.group.contains(x))
                    throw StaleCertificate("classified group generator escapes the witness group");
            for (const Perm& x : c.sylow.group.generators())
                if (!c.group.contains(x))
                    throw StaleCertificate("witness sylow generator escapes the witness group");
            for (const Perm& x : c.normalizer.group.generators())
                if (!c.group.contains(x))
                    throw StaleCertificate("witness normalizer generator escapes the witness group");
            if (c.sylow.group.order() != p_part(c.group.order(), p)) return false;
            return run_checks(c, lim).all();
        }
    }
    return false;
}

}  // namespace cwcell
