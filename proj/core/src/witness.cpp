#include "cwcell/witness.hpp"

#include <map>
#include <memory>
#include <unordered_map>

#include "cwcell/errors.hpp"
#include "cwcell/families.hpp"
#include "cwcell/fusion.hpp"
#include "cwcell/gf.hpp"
#include "cwcell/local.hpp"

namespace cwcell {

namespace {

const char* first_failing(const WitnessChecks& c) {
    if (!c.nontrivial_on_sylow) return "nontrivial_on_sylow";
    if (!c.trivial_on_order_p) return "trivial_on_order_p";
    if (!c.fusion_invariant_character) return "fusion_invariant_character";
    if (!c.unitary) return "unitary";
    if (!c.homomorphism_verified) return "homomorphism_verified";
    return "none";
}

}  // namespace

WitnessChecks run_checks(const PermGroup& g, const SubgroupHandle& sylow,
                         const SubgroupHandle& normalizer, const UnitaryRep& rep, std::uint64_t p,
                         double tol, const Limits& lim) {
    if (sylow.parent.degree() != g.degree() || normalizer.parent.degree() != g.degree())
        throw SourceMismatch("subgroup handles do not live in the ambient group");
    if (rep.source().degree() != normalizer.group.degree() ||
        rep.source().generators() != normalizer.group.generators())
        throw SourceMismatch("representation source is not the normalizer presentation");
    if (normalizer.group.order() > lim.enum_limit)
        throw OrderExceedsLimit(normalizer.group.order(), lim.enum_limit);
    if (sylow.group.order() > lim.enum_limit)
        throw OrderExceedsLimit(sylow.group.order(), lim.enum_limit);

    WitnessChecks out;
    Monomial ident(rep.dimension(), rep.root_order());
    double udefect = rep.max_unitary_defect();

    // Nontrivial on S: generators suffice, a representation trivial on
    // them is trivial on the subgroup they generate.
    double far = 0.0;
    for (const Perm& s : sylow.group.generators()) {
        Monomial ms = rep.image(s);
        udefect = std::max(udefect, unitary_defect(ms));
        far = std::max(far, frobenius_distance(ms, ident));
    }
    out.nontrivial_on_sylow = far > tol;

    // Every order-p element of N must land at the identity.
    out.trivial_on_order_p = true;
    for (auto it = normalizer.group.elements(); !it.done(); it.next()) {
        const Perm& x = it.current();
        if (x.order() != p) continue;
        Monomial mx = rep.image(x);
        udefect = std::max(udefect, unitary_defect(mx));
        if (frobenius_distance(mx, ident) > tol) {
            out.trivial_on_order_p = false;
            break;
        }
    }

    // Character constant across G-fusion of S-elements.  Exact classes
    // where g enumerates; otherwise cycle-type buckets, which refine
    // nothing but coarsen conjugacy, so bucket constancy is the
    // stronger statement.
    out.fusion_invariant_character = true;
    auto selems = sylow.group.element_list(lim.enum_limit);
    if (g.order() <= lim.enum_limit) {
        ConjugacyClasses classes = ConjugacyClasses::exact(g, lim);
        std::unordered_map<std::uint32_t, std::complex<double>> first;
        for (const Perm& s : selems) {
            Monomial ms = rep.image(s);
            udefect = std::max(udefect, unitary_defect(ms));
            std::complex<double> tr = ms.trace();
            auto [it, fresh] = first.emplace(classes.class_of(s), tr);
            if (!fresh && std::abs(it->second - tr) > tol) {
                out.fusion_invariant_character = false;
                break;
            }
        }
    } else {
        std::map<std::vector<Point>, std::complex<double>> first;
        for (const Perm& s : selems) {
            Monomial ms = rep.image(s);
            udefect = std::max(udefect, unitary_defect(ms));
            std::complex<double> tr = ms.trace();
            auto [it, fresh] = first.emplace(s.cycle_type(), tr);
            if (!fresh && std::abs(it->second - tr) > tol) {
                out.fusion_invariant_character = false;
                break;
            }
        }
    }

    out.unitary = udefect <= tol;

    bool complete = false;
    double hdefect = rep.homomorphism_defect(lim, &complete);
    out.homomorphism_verified = complete && hdefect <= tol;
    return out;
}

WitnessChecks run_checks(const WitnessCertificate& cert, const Limits& lim) {
    return run_checks(cert.group, cert.sylow, cert.normalizer, cert.rep, cert.p, cert.tolerance,
                      lim);
}

WitnessCertificate suzuki_witness(std::uint64_t q, double tol, const Limits& lim) {
    auto model = std::make_shared<const SuzukiModel>(suzuki_model(q, lim));
    const PermGroup& g = model->group;
    SubgroupHandle sylow(g, model->sylow_generators);

    // The model already certifies: S fixes exactly one point, so
    // N_G(S) sits inside that point's stabilizer, whose order is
    // |G| / (q^2+1) by transitivity; <S, torus> reaches that order.
    // The remaining fact is that the torus normalizes S, making
    // <S, torus> the full stabilizer and hence the full normalizer.
    for (const Perm& s : model->sylow_generators)
        if (!sylow.group.contains(s.conjugated_by(model->torus)))
            throw error("torus fails to normalize the sylow subgroup");
    std::vector<Perm> ngens = model->sylow_generators;
    ngens.push_back(model->torus);
    SubgroupHandle norm(g, ngens);
    if (norm.group.order() != q * q * (q - 1)) throw error("borel subgroup has unexpected order");

    auto sigma = std::make_shared<const UnitaryRep>(suzuki_sigma(model->n, lim));

    // Projection N -> AGL(1, q): u = S(a,b) * torus^j acts on the
    // a-coordinate line as x -> prim^j x + a; the kernel is the
    // involution subgroup {S(0,b)}.
    std::unordered_map<Perm, std::uint32_t, PermHash> torus_power;
    {
        Perm t = Perm::identity(g.degree());
        for (std::uint32_t j = 0; j + 1 < q; ++j) {
            torus_power.emplace(t, j);
            t = model->torus * t;
        }
    }
    Field f = model->field;
    std::uint32_t prim = f.primitive();
    auto phi = [model, torus_power, f, prim, q](const Perm& u) {
        Point pt = u(model->zero_point);
        auto [a, b] = model->ab_of_point[pt];
        Perm rest = model->unipotent[static_cast<std::size_t>(a) * q + b].inverse() * u;
        auto it = torus_power.find(rest);
        if (it == torus_power.end()) throw error("borel decomposition failed");
        std::uint32_t lam = f.pow(prim, it->second);
        std::vector<Point> img(q);
        for (std::uint32_t x = 0; x < q; ++x) img[x] = f.add(f.mul(lam, x), a);
        return Perm(std::move(img));
    };
    auto rho_eval = [sigma, phi](const Perm& u) { return sigma->image(phi(u)); };

    std::vector<Monomial> gen_images;
    gen_images.reserve(norm.group.generators().size());
    for (const Perm& gp : norm.group.generators()) gen_images.push_back(rho_eval(gp));
    UnitaryRep rho = norm.group.order() <= UnitaryRep::kTableLimit
                         ? UnitaryRep(norm.group, std::move(gen_images))
                         : UnitaryRep(norm.group, std::move(gen_images), rho_eval);

    WitnessChecks checks = run_checks(g, sylow, norm, rho, 2, tol, lim);
    if (!checks.all()) throw CheckFailed(first_failing(checks));
    return WitnessCertificate{2,   g,      sylow,           norm, std::move(rho),
                              checks, "suzuki_witness", tol};
}

WitnessCertificate psl2_witness(std::uint64_t p, std::uint32_t n, std::uint64_t m, double tol,
                                const Limits& lim) {
    if (!is_prime(p) || p == 2) throw BadParams("p must be an odd prime");
    if (n < 2) throw BadParams("order-p elements only reach the kernel when n >= 2");
    if (m == 0 || m % p == 0 || m > 65536) throw BadParams("m must be coprime to p and small");
    std::uint64_t pn = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        pn *= p;
        if (pn > 100000) throw BadParams("p^n exceeds the supported range");
    }
    std::uint64_t q = m * pn + 1;
    std::uint64_t root = 0;
    std::uint32_t exp = 0;
    if (!prime_power(q, root, exp) || q < 4 || q > 65536)
        throw BadParams("q = m*p^n + 1 must be a prime power in [4, 2^16]");

    PermGroup g = psl2_group(q, lim);
    SubgroupHandle s = sylow_subgroup(g, p, lim);
    if (s.group.order() != pn) throw error("sylow subgroup has unexpected order");
    SubgroupHandle norm0 = normalizer(g, s.group, lim);
    if (norm0.group.order() != 2 * pn)
        throw BadParams("normalizer is not dihedral of order 2p^n; this construction needs m = 2");

    Perm s0 = Perm::identity(g.degree());
    bool have_s0 = false;
    for (auto it = s.group.elements(); !it.done(); it.next())
        if (it.current().order() == pn) {
            s0 = it.current();
            have_s0 = true;
            break;
        }
    if (!have_s0) throw BadParams("sylow subgroup is not cyclic");
    Perm inv = s0.inverse();
    Perm t = Perm::identity(g.degree());
    bool have_t = false;
    for (auto it = norm0.group.elements(); !it.done(); it.next())
        if (it.current().order() == 2 && s0.conjugated_by(it.current()) == inv) {
            t = it.current();
            have_t = true;
            break;
        }
    if (!have_t) throw error("no inverting involution in the normalizer");
    SubgroupHandle norm(g, {s0, t});
    if (norm.group.order() != 2 * pn) throw error("s0 and t fail to generate the normalizer");

    std::uint32_t p32 = static_cast<std::uint32_t>(p);
    Monomial rs0(p32, std::vector<std::uint32_t>{0, 1}, std::vector<std::uint32_t>{1, p32 - 1});
    Monomial rt(p32, std::vector<std::uint32_t>{1, 0}, std::vector<std::uint32_t>{0, 0});
    UnitaryRep rho(norm.group, {rs0, rt});

    WitnessChecks checks = run_checks(g, s, norm, rho, p, tol, lim);
    if (!checks.all()) throw CheckFailed(first_failing(checks));
    return WitnessCertificate{p, g, s, norm, std::move(rho), checks, "psl2_witness", tol};
}

std::optional<WitnessCertificate> generic_quotient_witness(const PermGroup& g,
                                                           const SubgroupHandle& sylow,
                                                           std::uint64_t p, double tol,
                                                           const Limits& lim) {
    FusionReport report = fusion_closure(g, sylow, p, lim);
    SubgroupHandle norm = normalizer(g, sylow.group, lim);
    SubgroupHandle k = normal_closure(norm.group, report.closure.group.generators());

    bool s_in_k = true;
    for (const Perm& s : sylow.group.generators())
        if (!k.group.contains(s)) {
            s_in_k = false;
            break;
        }
    if (s_in_k) return std::nullopt;

    FusionControl control = fusion_controlled_by_normalizer(g, sylow, lim);
    if (!control.controlled)
        throw FusionNotControlled("witness semantics need fusion controlled by the normalizer");

    auto quo = std::make_shared<const QuotientMap>(norm.group, k.group, lim);
    std::uint32_t dim = static_cast<std::uint32_t>(quo->index());
    auto eval = [quo, dim](const Perm& u) {
        Perm pi = quo->image(u);
        std::vector<std::uint32_t> rows(dim);
        for (std::uint32_t j = 0; j < dim; ++j) rows[j] = pi(j);
        return Monomial(1, std::move(rows), std::vector<std::uint32_t>(dim, 0));
    };
    std::vector<Monomial> gen_images;
    gen_images.reserve(norm.group.generators().size());
    for (const Perm& gp : norm.group.generators()) gen_images.push_back(eval(gp));
    UnitaryRep rho = norm.group.order() <= UnitaryRep::kTableLimit
                         ? UnitaryRep(norm.group, std::move(gen_images))
                         : UnitaryRep(norm.group, std::move(gen_images), eval);

    WitnessChecks checks = run_checks(g, sylow, norm, rho, p, tol, lim);
    if (!checks.all()) throw CheckFailed(first_failing(checks));
    return WitnessCertificate{p,      g,
                              sylow,  norm,
                              std::move(rho), checks,
                              "generic_quotient_witness", tol};
}

}  // namespace cwcell
