#include "cwcell/group_ops.hpp"

#include <deque>

namespace cwcell {

SubgroupHandle normal_closure(const PermGroup& g, const std::vector<Perm>& seed) {
    std::vector<Perm> gens;
    std::deque<Perm> queue;
    for (const Perm& s : seed) {
        if (!g.contains(s)) throw NonMember("normal closure seed");
        if (s.is_identity()) continue;
        gens.push_back(s);
        queue.push_back(s);
    }
    PermGroup cur(g.degree(), gens);
    while (!queue.empty()) {
        Perm k = std::move(queue.front());
        queue.pop_front();
        for (const Perm& s : g.generators()) {
            Perm c = k.conjugated_by(s);
            if (cur.contains(c)) continue;
            gens.push_back(c);
            queue.push_back(std::move(c));
            cur = PermGroup(g.degree(), gens);
        }
    }
    return SubgroupHandle(g, gens);
}

SubgroupHandle centralizer(const PermGroup& g, const Perm& x, const Limits& lim) {
    if (g.order() > lim.enum_limit) throw OrderExceedsLimit(g.order(), lim.enum_limit);
    if (!g.contains(x)) throw NonMember("centralizer pivot");
    std::vector<Perm> gens;
    PermGroup cur(g.degree());
    for (auto it = g.elements(); !it.done(); it.next()) {
        const Perm& e = it.current();
        if (!(e * x == x * e)) continue;
        if (cur.contains(e)) continue;
        gens.push_back(e);
        cur = PermGroup(g.degree(), gens);
    }
    return SubgroupHandle(g, gens);
}

SubgroupHandle normalizer(const PermGroup& g, const PermGroup& sub, const Limits& lim) {
    if (g.order() > lim.enum_limit) throw OrderExceedsLimit(g.order(), lim.enum_limit);
    for (const Perm& s : sub.generators())
        if (!g.contains(s)) throw NonMember("subgroup generator outside group");
    std::vector<Perm> gens;
    PermGroup cur(g.degree());
    for (auto it = g.elements(); !it.done(); it.next()) {
        const Perm& e = it.current();
        bool normalizes = true;
        for (const Perm& s : sub.generators()) {
            if (!sub.contains(s.conjugated_by(e))) {
                normalizes = false;
                break;
            }
        }
        if (!normalizes || cur.contains(e)) continue;
        gens.push_back(e);
        cur = PermGroup(g.degree(), gens);
    }
    return SubgroupHandle(g, gens);
}

QuotientMap::QuotientMap(const PermGroup& g, const PermGroup& normal_sub, const Limits& lim)
    : group_(g), kernel_(normal_sub), quotient_(Point{0}) {
    for (const Perm& s : kernel_.generators())
        if (!group_.contains(s)) throw NonMember("kernel generator outside group");
    for (const Perm& a : group_.generators())
        for (const Perm& s : kernel_.generators())
            if (!kernel_.contains(s.conjugated_by(a)))
                throw NotNormal("conjugate of kernel generator escapes");
    std::uint64_t index = group_.order() / kernel_.order();
    if (index > lim.index_limit) throw IndexExceedsLimit(index, lim.index_limit);

    reps_.push_back(canonical_rep(Perm::identity(group_.degree())));
    index_of_.emplace(reps_[0], 0);
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        for (const Perm& s : group_.generators()) {
            Perm c = canonical_rep(s * reps_[i]);
            if (index_of_.emplace(c, static_cast<std::uint32_t>(reps_.size())).second)
                reps_.push_back(std::move(c));
        }
    }
    if (reps_.size() != index) throw error("coset enumeration out of step with group order");

    std::vector<Perm> qgens;
    for (const Perm& s : group_.generators()) qgens.push_back(image(s));
    quotient_ = PermGroup(static_cast<Point>(index), std::move(qgens));
    if (quotient_.order() != index)
        throw error("quotient action order differs from subgroup index");
}

Perm QuotientMap::canonical_rep(const Perm& g) const {
    // Minimize the images of the kernel's base points, level by level.
    // The minimum at each step depends only on the coset, and after the
    // last level the representative is pinned down uniquely.
    Perm h = g;
    for (std::size_t i = 0; i < kernel_.base_length(); ++i) {
        const auto& orbit = kernel_.level_orbit(i);
        Point best = orbit[0];
        for (Point t : orbit)
            if (h(t) < h(best)) best = t;
        h = h * kernel_.transversal_rep(i, best);
    }
    return h;
}

std::uint32_t QuotientMap::coset_index(const Perm& g) const {
    if (!group_.contains(g)) throw NonMember("element outside quotient domain");
    return index_of_.at(canonical_rep(g));
}

Perm QuotientMap::image(const Perm& g) const {
    if (!group_.contains(g)) throw NonMember("element outside quotient domain");
    std::vector<Point> img(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i)
        img[i] = index_of_.at(canonical_rep(g * reps_[i]));
    return Perm(std::move(img));
}

SubgroupHandle extend_subgroup(const SubgroupHandle& h, const std::vector<Perm>& extra) {
    std::vector<Perm> gens = h.group.generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return SubgroupHandle(h.parent, std::move(gens));
}

}  // namespace cwcell
