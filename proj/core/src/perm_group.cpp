#include "cwcell/perm_group.hpp"

#include <algorithm>
#include <unordered_set>

namespace cwcell {

namespace {

// Orders can overflow 64 bits for large symmetric groups; fail loudly.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) throw SizeExceeded("group order overflows 64 bits");
    return a * b;
}

Point first_moved(const Perm& g) {
    for (Point x = 0; x < g.degree(); ++x)
        if (g(x) != x) return x;
    throw BadParams("identity has no moved point");
}

// Explicit transversals cost degree * orbit words of memory; past this
// degree we keep only the Schreier tree and rebuild representatives.
constexpr Point kCacheDegreeLimit = 4096;

}  // namespace

PermGroup::PermGroup(Point degree) : degree_(degree) {}

PermGroup::PermGroup(Point degree, std::vector<Perm> generators) : degree_(degree) {
    std::unordered_set<Perm, PermHash> seen;
    for (auto& g : generators) {
        if (g.degree() != degree_) throw DegreeMismatch(g.degree(), degree_);
        if (g.is_identity()) continue;
        if (seen.insert(g).second) gens_.push_back(std::move(g));
    }
    build();
}

PermGroup PermGroup::with_tag(FamilyTag t) const {
    PermGroup copy = *this;
    copy.tag_ = std::move(t);
    return copy;
}

Perm PermGroup::Level::rep(Point x, Point degree) const {
    if (!cache.empty()) return cache[slot[x]];
    // Walk the Schreier tree up to the base, then multiply back down.
    std::vector<Point> path;
    for (Point y = x; y != base; y = parent[y]) path.push_back(y);
    Perm u = Perm::identity(degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = tree_gens[via[*it]] * u;
    return u;
}

void PermGroup::recompute_orbit(std::size_t li) {
    Level& lv = levels_[li];
    lv.orbit.clear();
    lv.parent.assign(degree_, UINT32_MAX);
    lv.via.assign(degree_, UINT32_MAX);
    lv.slot.assign(degree_, UINT32_MAX);
    lv.cache.clear();

    // The tree may use any known group elements, not just the strong
    // generators; repeated squares keep it shallow when a generator has
    // long cycles (the orbit stays the same, only representatives and
    // their word lengths change).
    lv.tree_gens = lv.gens;
    if (degree_ > kCacheDegreeLimit) {
        std::size_t n_orig = lv.gens.size();
        for (std::size_t i = 0; i < n_orig; ++i) {
            Perm sq = lv.gens[i] * lv.gens[i];
            for (Point bits = degree_; bits > 1 && !sq.is_identity(); bits >>= 1) {
                lv.tree_gens.push_back(sq);
                sq = sq * sq;
            }
        }
    }

    bool use_cache = degree_ <= kCacheDegreeLimit;
    lv.orbit.push_back(lv.base);
    lv.parent[lv.base] = lv.base;
    lv.slot[lv.base] = 0;
    if (use_cache) lv.cache.push_back(Perm::identity(degree_));
    for (std::size_t idx = 0; idx < lv.orbit.size(); ++idx) {
        Point x = lv.orbit[idx];
        for (std::uint32_t gi = 0; gi < lv.tree_gens.size(); ++gi) {
            Point y = lv.tree_gens[gi](x);
            if (lv.slot[y] != UINT32_MAX) continue;
            lv.slot[y] = static_cast<std::uint32_t>(lv.orbit.size());
            lv.orbit.push_back(y);
            lv.parent[y] = x;
            lv.via[y] = gi;
            if (use_cache) lv.cache.push_back(lv.tree_gens[gi] * lv.cache[idx]);
        }
    }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
        Point x = g(levels_[i].base);
        if (!levels_[i].in_orbit(x)) return {std::move(g), i};
        g = levels_[i].rep(x, degree_).inverse() * g;
    }
    return {std::move(g), levels_.size()};
}

// Completes level li assuming all deeper levels are complete: every
// Schreier generator of this level must sift to the identity through
// the rest of the chain.  Residues that fail are adjoined as strong
// generators at the levels they stabilize, and those levels are
// re-completed deepest first.
void PermGroup::complete_level(std::size_t li) {
    recompute_orbit(li);
    // Deeper recursion can grow the level vector, so never hold a
    // reference to levels_[li] across it; the snapshot stays valid
    // because recursion only touches deeper levels.
    const std::vector<Point> orbit = levels_[li].orbit;
    const std::vector<Perm> gens = levels_[li].gens;
    const Point base = levels_[li].base;
    for (std::size_t idx = 0; idx < orbit.size(); ++idx) {
        Point x = orbit[idx];
        Perm ux = levels_[li].rep(x, degree_);
        for (const Perm& g : gens) {
            Perm w = g * ux;
            Point y = w(base);
            Perm sg = levels_[li].rep(y, degree_).inverse() * w;
            if (sg.is_identity()) continue;
            auto [h, j] = strip(std::move(sg), li + 1);
            if (h.is_identity()) continue;
            if (j == levels_.size()) {
                Level fresh;
                fresh.base = first_moved(h);
                fresh.parent.assign(degree_, UINT32_MAX);
                fresh.via.assign(degree_, UINT32_MAX);
                fresh.slot.assign(degree_, UINT32_MAX);
                levels_.push_back(std::move(fresh));
            }
            for (std::size_t l = li + 1; l <= j; ++l) levels_[l].gens.push_back(h);
            for (std::size_t l = j; l > li; --l) complete_level(l);
        }
    }
}

void PermGroup::build() {
    levels_.clear();
    order_ = 1;
    if (gens_.empty()) return;
    Level root;
    root.base = degree_;
    for (const Perm& g : gens_) root.base = std::min(root.base, first_moved(g));
    root.gens = gens_;
    root.parent.assign(degree_, UINT32_MAX);
    root.via.assign(degree_, UINT32_MAX);
    root.slot.assign(degree_, UINT32_MAX);
    levels_.push_back(std::move(root));
    complete_level(0);
    for (const Level& lv : levels_) order_ = checked_mul(order_, lv.orbit.size());
}

Perm PermGroup::sift(const Perm& g) const {
    if (g.degree() != degree_) throw DegreeMismatch(g.degree(), degree_);
    return strip(g, 0).first;
}

bool PermGroup::contains(const Perm& g) const { return sift(g).is_identity(); }

Perm PermGroup::random_element(std::mt19937_64& rng) const {
    Perm out = Perm::identity(degree_);
    for (const Level& lv : levels_) {
        std::uniform_int_distribution<std::size_t> pick(0, lv.orbit.size() - 1);
        out = out * lv.rep(lv.orbit[pick(rng)], degree_);
    }
    return out;
}

PermGroup::ElementStream::ElementStream(const PermGroup& g)
    : g_(&g),
      digit_(g.levels_.size(), 0),
      current_(Perm::identity(g.degree())),
      done_(false) {
    prefix_.reserve(digit_.size());
    if (!digit_.empty()) recompute_from(0);
}

void PermGroup::ElementStream::recompute_from(std::size_t level) {
    prefix_.erase(prefix_.begin() + static_cast<std::ptrdiff_t>(level), prefix_.end());
    for (std::size_t i = level; i < digit_.size(); ++i) {
        const auto& lv = g_->levels_[i];
        Perm u = lv.rep(lv.orbit[digit_[i]], g_->degree());
        prefix_.push_back(i == 0 ? std::move(u) : prefix_[i - 1] * u);
    }
    current_ = prefix_.empty() ? Perm::identity(g_->degree()) : prefix_.back();
}

void PermGroup::ElementStream::next() {
    if (done_) return;
    if (digit_.empty()) {
        done_ = true;
        return;
    }
    std::size_t i = digit_.size();
    while (i > 0) {
        --i;
        if (++digit_[i] < g_->levels_[i].orbit.size()) {
            recompute_from(i);
            return;
        }
        digit_[i] = 0;
    }
    done_ = true;
}

std::vector<Perm> PermGroup::element_list(std::uint64_t limit) const {
    if (order_ > limit) throw OrderExceedsLimit(order_, limit);
    std::vector<Perm> out;
    out.reserve(order_);
    for (auto it = elements(); !it.done(); it.next()) out.push_back(it.current());
    return out;
}

SubgroupHandle::SubgroupHandle(PermGroup parent_group, std::vector<Perm> sub_generators)
    : parent(std::move(parent_group)), group(parent.degree(), sub_generators) {
    for (const Perm& g : sub_generators)
        if (!parent.contains(g)) throw NonMember("subgroup generator outside parent group");
}

}  // namespace cwcell
