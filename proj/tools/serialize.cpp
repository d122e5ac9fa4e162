#include "serialize.hpp"

#include <utility>
#include <vector>

#include "cwcell/errors.hpp"
#include "cwcell/monomial.hpp"

namespace cwcell::tool {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

json perm_to_json(const Perm& x) {
    json arr = json::array();
    for (Point i = 0; i < x.degree(); ++i) arr.push_back(x(i));
    return arr;
}

Perm perm_from_json(const json& j, Point degree) {
    if (!j.is_array() || j.size() != degree)
        throw StaleCertificate("permutation image has the wrong length");
    std::vector<Point> img;
    img.reserve(degree);
    for (const json& e : j) {
        if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= degree)
            throw StaleCertificate("permutation image entry out of range");
        img.push_back(e.get<Point>());
    }
    try {
        return Perm(std::move(img));
    } catch (const BadParams&) {
        throw StaleCertificate("permutation image is not a bijection");
    }
}

namespace {

json perm_list(const std::vector<Perm>& xs) {
    json arr = json::array();
    for (const Perm& x : xs) arr.push_back(perm_to_json(x));
    return arr;
}

std::vector<Perm> perm_list_from(const json& j, Point degree, const char* what) {
    if (!j.is_array()) throw StaleCertificate(std::string(what) + ": expected an array");
    std::vector<Perm> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(perm_from_json(e, degree));
    return out;
}

json monomial_to_json(const Monomial& m) {
    json rows = json::array(), phases = json::array();
    for (std::uint32_t c = 0; c < m.dim(); ++c) {
        rows.push_back(m.row(c));
        phases.push_back(m.phase(c));
    }
    return json{{"phases", std::move(phases)}, {"rows", std::move(rows)}};
}

Monomial monomial_from_json(const json& j, std::uint32_t root_order) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("phases"))
        throw StaleCertificate("matrix entry needs rows and phases");
    std::vector<std::uint32_t> rows = j.at("rows").get<std::vector<std::uint32_t>>();
    std::vector<std::uint32_t> phases = j.at("phases").get<std::vector<std::uint32_t>>();
    try {
        return Monomial(root_order, std::move(rows), std::move(phases));
    } catch (const BadParams&) {
        throw StaleCertificate("matrix entry is not a monomial matrix");
    }
}

json checks_to_json(const WitnessChecks& c) {
    return json{{"fusion_invariant_character", c.fusion_invariant_character},
                {"homomorphism_verified", c.homomorphism_verified},
                {"nontrivial_on_sylow", c.nontrivial_on_sylow},
                {"trivial_on_order_p", c.trivial_on_order_p},
                {"unitary", c.unitary}};
}

WitnessChecks checks_from_json(const json& j) {
    WitnessChecks c;
    c.fusion_invariant_character = j.value("fusion_invariant_character", false);
    c.homomorphism_verified = j.value("homomorphism_verified", false);
    c.nontrivial_on_sylow = j.value("nontrivial_on_sylow", false);
    c.trivial_on_order_p = j.value("trivial_on_order_p", false);
    c.unitary = j.value("unitary", false);
    return c;
}

json certificate_body(const WitnessCertificate& c) {
    json rep_images = json::array();
    for (const Monomial& m : c.rep.generator_images()) rep_images.push_back(monomial_to_json(m));
    return json{{"checks", checks_to_json(c.checks)},
                {"degree", c.group.degree()},
                {"group", perm_list(c.group.generators())},
                {"group_order", c.group.order()},
                {"normalizer", perm_list(c.normalizer.group.generators())},
                {"normalizer_order", c.normalizer.group.order()},
                {"p", c.p},
                {"provenance", c.provenance},
                {"rep",
                 json{{"dimension", c.rep.dimension()},
                      {"generator_images", std::move(rep_images)},
                      {"root_order", c.rep.root_order()}}},
                {"schema", "cwcell-certificate/1"},
                {"sylow", perm_list(c.sylow.group.generators())},
                {"sylow_order", c.sylow.group.order()},
                {"tolerance", c.tolerance}};
}

}  // namespace

json certificate_to_json(const WitnessCertificate& c) {
    json body = certificate_body(c);
    body["digest"] = hex64(fnv1a64(body.dump()));
    return body;
}

std::string certificate_digest(const WitnessCertificate& c) {
    return hex64(fnv1a64(certificate_body(c).dump()));
}

WitnessCertificate certificate_from_json(const json& j, const Limits& lim) {
    (void)lim;  // groups rebuild from explicit generators, no enumeration
    if (!j.is_object() || j.value("schema", "") != std::string("cwcell-certificate/1"))
        throw StaleCertificate("not a cwcell-certificate/1 document");
    json body = j;
    std::string digest = body.value("digest", "");
    body.erase("digest");
    if (digest != hex64(fnv1a64(body.dump())))
        throw StaleCertificate("certificate digest mismatch");

    Point degree = body.at("degree").get<Point>();
    try {
        PermGroup group(degree, perm_list_from(body.at("group"), degree, "group generators"));
        if (group.order() != body.at("group_order").get<std::uint64_t>())
            throw StaleCertificate("group order mismatch");
        SubgroupHandle sylow(group, perm_list_from(body.at("sylow"), degree, "sylow generators"));
        if (sylow.group.order() != body.at("sylow_order").get<std::uint64_t>())
            throw StaleCertificate("sylow order mismatch");
        SubgroupHandle norm(group,
                            perm_list_from(body.at("normalizer"), degree, "normalizer generators"));
        if (norm.group.order() != body.at("normalizer_order").get<std::uint64_t>())
            throw StaleCertificate("normalizer order mismatch");

        const json& jr = body.at("rep");
        std::uint32_t root = jr.at("root_order").get<std::uint32_t>();
        std::vector<Monomial> images;
        for (const json& m : jr.at("generator_images")) images.push_back(monomial_from_json(m, root));
        UnitaryRep rep(norm.group, images);
        if (rep.dimension() != jr.at("dimension").get<std::uint32_t>())
            throw StaleCertificate("representation dimension mismatch");

        return WitnessCertificate{body.at("p").get<std::uint64_t>(),
                                  std::move(group),
                                  std::move(sylow),
                                  std::move(norm),
                                  std::move(rep),
                                  checks_from_json(body.at("checks")),
                                  body.value("provenance", ""),
                                  body.at("tolerance").get<double>()};
    } catch (const NonMember& e) {
        throw StaleCertificate(e.what());
    } catch (const json::exception& e) {
        throw StaleCertificate(std::string("malformed certificate: ") + e.what());
    }
}

json verdict_to_json(const TrichotomyVerdict& v) {
    json verdict{{"branch", branch_name(v.branch)},
                 {"fundamental_group_note", v.fundamental_group_note}};
    if (!v.aspherical_reason.empty()) verdict["aspherical_reason"] = v.aspherical_reason;
    if (v.criterion) verdict["criterion"] = std::string(1, *v.criterion);
    if (v.branch == Branch::TorsionFree) {
        verdict["omega_order"] = v.omega_order;
        if (*v.criterion == 'B') verdict["closure_order"] = v.closure_order;
    }
    if (v.cellularity_of_completion)
        verdict["cellularity_of_completion"] = *v.cellularity_of_completion;
    if (!v.diagnostics.empty()) verdict["diagnostics"] = v.diagnostics;
    if (!v.notes.empty()) verdict["notes"] = v.notes;

    json evidence = json::object();
    if (v.reduced) evidence["reduced_generators"] = perm_list(v.reduced->group.generators());
    if (v.branch == Branch::TorsionFree) {
        evidence["sylow_generators"] = perm_list(v.sylow->group.generators());
        if (*v.criterion == 'B') {
            json fused = json::array();
            for (const FusedElement& fe : v.fused)
                fused.push_back(json{{"conjugator", perm_to_json(fe.conjugator)},
                                     {"element", perm_to_json(fe.element)}});
            evidence["fused"] = std::move(fused);
        }
    }
    if (v.branch == Branch::Torsion) {
        json cert = certificate_to_json(*v.witness);
        verdict["witness_digest"] = cert.at("digest");
        evidence["witness"] = std::move(cert);
    }
    if (!evidence.empty()) verdict["evidence"] = std::move(evidence);

    json reduction = json::array();
    for (const ReductionStage& st : v.reduction)
        reduction.push_back(json{{"order", st.order}, {"stage", st.stage}});

    json out{{"certified", v.certified}, {"p", v.p},
             {"reduction", std::move(reduction)}, {"schema", "cwcell-verdict/1"},
             {"seed", v.seed},                    {"tolerance", v.tolerance},
             {"verdict", std::move(verdict)}};
    if (!v.primes.empty()) out["primes_q"] = v.primes;
    return out;
}

TrichotomyVerdict verdict_from_json(const json& j, const PermGroup& g, const Limits& lim) {
    if (!j.is_object() || j.value("schema", "") != std::string("cwcell-verdict/1"))
        throw StaleCertificate("not a cwcell-verdict/1 document");
    try {
        TrichotomyVerdict v;
        v.p = j.at("p").get<std::uint64_t>();
        v.certified = j.at("certified").get<bool>();
        v.seed = j.value("seed", std::uint64_t{0});
        v.tolerance = j.value("tolerance", 1e-9);
        if (j.contains("primes_q")) v.primes = j.at("primes_q").get<std::vector<std::uint64_t>>();
        for (const json& st : j.at("reduction"))
            v.reduction.push_back(
                {st.at("stage").get<std::string>(), st.at("order").get<std::uint64_t>()});

        const json& jv = j.at("verdict");
        std::string branch = jv.at("branch").get<std::string>();
        if (branch == "aspherical")
            v.branch = Branch::Aspherical;
        else if (branch == "torsion_free")
            v.branch = Branch::TorsionFree;
        else if (branch == "torsion")
            v.branch = Branch::Torsion;
        else if (branch == "unknown")
            v.branch = Branch::Unknown;
        else
            throw StaleCertificate("unknown branch name: " + branch);
        v.aspherical_reason = jv.value("aspherical_reason", "");
        if (jv.contains("criterion")) {
            std::string c = jv.at("criterion").get<std::string>();
            if (c.size() != 1) throw StaleCertificate("criterion must be a single letter");
            v.criterion = c[0];
        }
        v.omega_order = jv.value("omega_order", std::uint64_t{0});
        v.closure_order = jv.value("closure_order", std::uint64_t{0});
        v.fundamental_group_note = jv.value("fundamental_group_note", "");
        if (jv.contains("cellularity_of_completion"))
            v.cellularity_of_completion = jv.at("cellularity_of_completion").get<bool>();
        if (jv.contains("diagnostics"))
            v.diagnostics = jv.at("diagnostics").get<std::vector<std::string>>();
        if (jv.contains("notes")) v.notes = jv.at("notes").get<std::vector<std::string>>();

        const json empty = json::object();
        const json& ev = jv.contains("evidence") ? jv.at("evidence") : empty;
        if (ev.contains("reduced_generators")) {
            try {
                v.reduced = SubgroupHandle(
                    g, perm_list_from(ev.at("reduced_generators"), g.degree(), "reduced group"));
            } catch (const NonMember& e) {
                throw StaleCertificate(e.what());
            }
        }
        if (ev.contains("sylow_generators")) {
            if (!v.reduced) throw StaleCertificate("sylow evidence without a reduced group");
            try {
                v.sylow = SubgroupHandle(
                    v.reduced->group,
                    perm_list_from(ev.at("sylow_generators"), g.degree(), "sylow subgroup"));
            } catch (const NonMember& e) {
                throw StaleCertificate(e.what());
            }
        }
        if (ev.contains("fused")) {
            for (const json& fe : ev.at("fused"))
                v.fused.push_back({perm_from_json(fe.at("element"), g.degree()),
                                   perm_from_json(fe.at("conjugator"), g.degree())});
        }
        if (ev.contains("witness")) v.witness = certificate_from_json(ev.at("witness"), lim);
        return v;
    } catch (const json::exception& e) {
        throw StaleCertificate(std::string("malformed verdict: ") + e.what());
    }
}

}  // namespace cwcell::tool
