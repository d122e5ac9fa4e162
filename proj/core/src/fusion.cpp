#include "cwcell/fusion.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cwcell/conjugacy.hpp"
#include "cwcell/gf.hpp"

namespace cwcell {

namespace {

void require_sylow(const PermGroup& g, const SubgroupHandle& s, std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(p);
    if (!is_p_group(s.group, p)) throw NotSylow("subgroup order is not a power of the prime");
    if (s.group.order() != p_part(g.order(), p))
        throw NotSylow("subgroup order " + std::to_string(s.group.order()) +
                       " is below the full p-part " + std::to_string(p_part(g.order(), p)));
    for (const auto& gen : s.group.generators())
        if (!g.contains(gen)) throw NotSylow("generator lies outside the ambient group");
}

}  // namespace

FusionReport fusion_closure(const PermGroup& g, const SubgroupHandle& s, std::uint64_t p,
                            const Limits& lim) {
    require_sylow(g, s, p);
    SubgroupHandle omega(g, omega1(s.group, p, lim).group.generators());

    auto classes = ConjugacyClasses::exact(g, lim);
    std::vector<Perm> omega_elems = omega.group.element_list(lim.enum_limit);
    std::set<std::uint32_t> target_classes;
    for (const auto& t : omega_elems) target_classes.insert(classes.class_of(t));

    std::vector<FusedElement> fused;
    std::vector<Perm> closure_gens;
    for (auto it = s.group.elements(); !it.done(); it.next()) {
        const Perm& e = it.current();
        if (e.is_identity()) continue;
        std::uint32_t cid = classes.class_of(e);
        if (!target_classes.count(cid)) continue;
        Perm conj = Perm::identity(g.degree());
        if (!omega.group.contains(e)) {
            const Perm* target = nullptr;
            for (const auto& t : omega_elems)
                if (!t.is_identity() && classes.class_of(t) == cid) {
                    target = &t;
                    break;
                }
            // same class, so a conjugator exists
            conj = *conjugating_element(g, e, *target);
        }
        fused.push_back({e, conj});
        closure_gens.push_back(e);
    }
    SubgroupHandle closure(g, closure_gens);
    bool generates = closure.group.order() == s.group.order();
    return {p,       s,         omega,        std::move(fused),
            closure, generates, std::nullopt, std::nullopt};
}

FusionControl fusion_controlled_by_normalizer(const PermGroup& g, const SubgroupHandle& s,
                                              const Limits& lim) {
    auto n = normalizer(g, s.group, lim);
    auto gcls = ConjugacyClasses::exact(g, lim);
    auto ncls = ConjugacyClasses::exact(n.group, lim);

    // Two S-elements in the same G-class must share an N-class; compare
    // each against the first element seen in its G-class bucket.
    std::map<std::uint32_t, std::pair<Perm, std::uint32_t>> first_seen;
    for (auto it = s.group.elements(); !it.done(); it.next()) {
        const Perm& e = it.current();
        std::uint32_t gc = gcls.class_of(e);
        std::uint32_t nc = ncls.class_of(e);
        auto found = first_seen.find(gc);
        if (found == first_seen.end()) {
            first_seen.emplace(gc, std::make_pair(e, nc));
        } else if (found->second.second != nc) {
            auto w = conjugating_element(g, found->second.first, e);
            return {false, std::make_pair(found->second.first, e), std::move(w)};
        }
    }
    return {true, std::nullopt, std::nullopt};
}

bool ti_sylow(const PermGroup& g, std::uint64_t p, const Limits& lim, std::size_t* count_out) {
    auto s = sylow_subgroup(g, p, lim);
    std::vector<Perm> base = s.group.element_list(lim.enum_limit);
    std::sort(base.begin(), base.end());

    std::set<std::vector<Perm>> seen{base};
    std::vector<std::vector<Perm>> queue{base};
    while (!queue.empty()) {
        auto cur = std::move(queue.back());
        queue.pop_back();
        for (const auto& gen : g.generators()) {
            std::vector<Perm> img;
            img.reserve(cur.size());
            for (const auto& e : cur) img.push_back(e.conjugated_by(gen));
            std::sort(img.begin(), img.end());
            if (seen.insert(img).second) {
                if (seen.size() * base.size() > lim.enum_limit)
                    throw OrderExceedsLimit(seen.size() * base.size(), lim.enum_limit);
                queue.push_back(std::move(img));
            }
        }
    }
    if (count_out) *count_out = seen.size();

    // S vs each conjugate suffices: any pairwise intersection is a
    // conjugate of one of these.
    for (const auto& other : seen) {
        if (other == base) continue;
        std::vector<Perm> common;
        std::set_intersection(base.begin(), base.end(), other.begin(), other.end(),
                              std::back_inserter(common));
        if (common.size() > 1) return false;
    }
    return true;
}

}  // namespace cwcell
