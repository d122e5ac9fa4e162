#include "cwcell/conjugacy.hpp"

#include <deque>
#include <random>

namespace cwcell {

namespace {

// Expands the conjugation orbit of every seed not yet classified.
// Closure under conjugation by the group's generators reaches the full
// class of each seed.
void absorb_class(const PermGroup& g, const Perm& seed,
                  std::unordered_map<Perm, std::uint32_t, PermHash>& class_of,
                  std::vector<Perm>& reps, std::vector<std::uint64_t>& sizes) {
    if (class_of.contains(seed)) return;
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(seed);
    sizes.push_back(0);
    std::deque<Perm> queue{seed};
    class_of.emplace(seed, id);
    while (!queue.empty()) {
        Perm x = std::move(queue.front());
        queue.pop_front();
        ++sizes[id];
        for (const Perm& s : g.generators()) {
            Perm c = x.conjugated_by(s);
            if (class_of.emplace(c, id).second) queue.push_back(std::move(c));
        }
    }
}

}  // namespace

ConjugacyClasses ConjugacyClasses::exact(const PermGroup& g, const Limits& lim) {
    if (g.order() > lim.enum_limit) throw OrderExceedsLimit(g.order(), lim.enum_limit);
    ConjugacyClasses out;
    for (auto it = g.elements(); !it.done(); it.next())
        absorb_class(g, it.current(), out.class_of_, out.reps_, out.sizes_);
    out.complete_ = true;
    return out;
}

ConjugacyClasses ConjugacyClasses::sampled(const PermGroup& g, std::size_t samples,
                                           std::uint64_t seed) {
    ConjugacyClasses out;
    std::mt19937_64 rng(seed);
    absorb_class(g, Perm::identity(g.degree()), out.class_of_, out.reps_, out.sizes_);
    for (std::size_t i = 0; i < samples; ++i)
        absorb_class(g, g.random_element(rng), out.class_of_, out.reps_, out.sizes_);
    out.complete_ = false;
    return out;
}

std::uint32_t ConjugacyClasses::class_of(const Perm& x) const {
    auto it = class_of_.find(x);
    if (it == class_of_.end()) throw NonMember("element not covered by class decomposition");
    return it->second;
}

std::optional<Perm> conjugating_element(const PermGroup& g, const Perm& x, const Perm& y) {
    if (!g.contains(x)) throw NonMember("conjugacy source");
    if (!g.contains(y)) throw NonMember("conjugacy target");
    if (x == y) return Perm::identity(g.degree());
    if (x.cycle_type() != y.cycle_type()) return std::nullopt;
    // BFS over the conjugation orbit of x, tracking a conjugator per
    // visited element: if c maps x to z and s z s^{-1} = w, then s c
    // maps x to w.
    std::unordered_map<Perm, Perm, PermHash> conj;
    std::deque<Perm> queue{x};
    conj.emplace(x, Perm::identity(g.degree()));
    while (!queue.empty()) {
        Perm z = std::move(queue.front());
        queue.pop_front();
        const Perm cz = conj.at(z);
        for (const Perm& s : g.generators()) {
            Perm w = z.conjugated_by(s);
            if (conj.contains(w)) continue;
            Perm cw = s * cz;
            if (w == y) return cw;
            conj.emplace(w, std::move(cw));
            queue.push_back(std::move(w));
        }
    }
    return std::nullopt;
}

bool are_conjugate(const PermGroup& g, const Perm& x, const Perm& y) {
    return conjugating_element(g, x, y).has_value();
}

}  // namespace cwcell
