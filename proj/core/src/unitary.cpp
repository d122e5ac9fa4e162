#include "cwcell/unitary.hpp"

#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "cwcell/errors.hpp"
#include "cwcell/families.hpp"
#include "cwcell/gf.hpp"

namespace cwcell {

namespace {

// Exact equality across possibly different root-order encodings.
bool same_matrix(const Monomial& a, const Monomial& b) {
    if (a.root_order() == b.root_order()) return a == b;
    std::uint64_t l = std::lcm<std::uint64_t>(a.root_order(), b.root_order());
    if (l > 0xffffffffull) throw BadParams("root order overflow while comparing matrices");
    std::uint32_t l32 = static_cast<std::uint32_t>(l);
    return a.rescaled(l32) == b.rescaled(l32);
}

}  // namespace

LinearCharacter::LinearCharacter(const PermGroup& source, std::uint32_t root_order,
                                 const std::vector<std::uint32_t>& gen_exponents)
    : source_(source), order_(root_order) {
    if (root_order == 0) throw BadParams("character root order must be positive");
    if (gen_exponents.size() != source.generators().size())
        throw BadParams("need one exponent per generator");
    if (source.order() > kSourceLimit) throw SizeExceeded("character source too large to tabulate");

    const auto& gens = source_.generators();
    std::vector<Perm> worklist{Perm::identity(source_.degree())};
    exp_.emplace(worklist[0], 0u);
    for (std::size_t i = 0; i < worklist.size(); ++i) {
        Perm x = worklist[i];
        std::uint32_t ex = exp_.at(x);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Perm y = gens[k] * x;
            std::uint32_t ey = (ex + gen_exponents[k]) % order_;
            auto [it, fresh] = exp_.emplace(y, ey);
            if (fresh)
                worklist.push_back(std::move(y));
            else if (it->second != ey)
                throw NotCharacter("generator exponents are inconsistent on the group");
        }
    }
}

bool LinearCharacter::trivial() const {
    for (const auto& [x, e] : exp_)
        if (e != 0) return false;
    return true;
}

std::uint32_t LinearCharacter::exponent(const Perm& x) const {
    auto it = exp_.find(x);
    if (it == exp_.end()) throw NonMember("element outside the character's source");
    return it->second;
}

std::optional<std::uint32_t> LinearCharacter::try_exponent(const Perm& x) const {
    auto it = exp_.find(x);
    if (it == exp_.end()) return std::nullopt;
    return it->second;
}

std::complex<double> LinearCharacter::value(const Perm& x) const {
    return std::polar(1.0, 2.0 * std::numbers::pi * exponent(x) / order_);
}

void UnitaryRep::unify_orders() {
    if (gen_images_.size() != source_.generators().size())
        throw BadParams("need one image per generator");
    std::uint64_t l = 1;
    for (const Monomial& m : gen_images_) {
        if (m.dim() != gen_images_[0].dim()) throw DegreeMismatch(m.dim(), gen_images_[0].dim());
        l = std::lcm<std::uint64_t>(l, m.root_order());
    }
    if (l > 0xffffffffull) throw BadParams("root order overflow across generator images");
    order_ = static_cast<std::uint32_t>(l);
    for (Monomial& m : gen_images_)
        if (m.root_order() != order_) m = m.rescaled(order_);
}

UnitaryRep::UnitaryRep(const PermGroup& source, std::vector<Monomial> gen_images)
    : source_(source), order_(1), gen_images_(std::move(gen_images)) {
    unify_orders();
    if (source_.order() > kTableLimit)
        throw SizeExceeded("source too large for a full image table; supply an evaluator");

    std::uint32_t d = dimension();
    const auto& gens = source_.generators();
    std::vector<Perm> worklist{Perm::identity(source_.degree())};
    index_.emplace(worklist[0], 0u);
    table_.push_back(Monomial(d, order_));
    for (std::size_t i = 0; i < worklist.size(); ++i) {
        Perm x = worklist[i];
        Monomial mx = table_[index_.at(x)];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Perm y = gens[k] * x;
            if (index_.emplace(y, static_cast<std::uint32_t>(table_.size())).second) {
                table_.push_back(gen_images_[k] * mx);
                worklist.push_back(std::move(y));
            }
        }
    }
}

UnitaryRep::UnitaryRep(const PermGroup& source, std::vector<Monomial> gen_images,
                       std::function<Monomial(const Perm&)> evaluator)
    : source_(source), order_(1), gen_images_(std::move(gen_images)), eval_(std::move(evaluator)) {
    unify_orders();
    if (!eval_) throw BadParams("evaluator mode needs a callable evaluator");
    const auto& gens = source_.generators();
    for (std::size_t k = 0; k < gens.size(); ++k)
        if (!same_matrix(eval_(gens[k]), gen_images_[k]))
            throw BadParams("evaluator disagrees with the generator images");
}

Monomial UnitaryRep::image(const Perm& x) const {
    if (x.degree() != source_.degree()) throw DegreeMismatch(x.degree(), source_.degree());
    if (table_mode()) {
        auto it = index_.find(x);
        if (it == index_.end()) throw NonMember("element outside the representation's source");
        return table_[it->second];
    }
    if (!source_.contains(x)) throw NonMember("element outside the representation's source");
    Monomial m = eval_(x);
    if (m.root_order() == order_) return m;
    if (order_ % m.root_order() == 0) return m.rescaled(order_);
    throw BadParams("evaluator root order incompatible with the generator images");
}

double UnitaryRep::homomorphism_defect(const Limits& lim, bool* complete,
                                       std::uint64_t seed) const {
    double worst = 0.0;
    std::uint64_t n = source_.order();
    const auto& gens = source_.generators();
    if (n <= kPairLimit) {
        auto elems = source_.element_list(n);
        for (const Perm& x : elems) {
            Monomial mx = image(x);
            for (const Perm& y : elems)
                worst = std::max(worst, frobenius_distance(image(x * y), mx * image(y)));
        }
        if (complete) *complete = true;
        return worst;
    }
    if (n <= lim.enum_limit) {
        for (auto it = source_.elements(); !it.done(); it.next()) {
            const Perm& x = it.current();
            Monomial mx = image(x);
            for (std::size_t k = 0; k < gens.size(); ++k)
                worst = std::max(worst, frobenius_distance(image(gens[k] * x), gen_images_[k] * mx));
        }
        if (complete) *complete = true;
        return worst;
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 64; ++i) {
        Perm x = source_.random_element(rng);
        Perm y = source_.random_element(rng);
        worst = std::max(worst, frobenius_distance(image(x * y), image(x) * image(y)));
    }
    if (complete) *complete = false;
    return worst;
}

double UnitaryRep::max_unitary_defect() const {
    double worst = 0.0;
    for (const Monomial& m : gen_images_) worst = std::max(worst, unitary_defect(m));
    for (const Monomial& m : table_) worst = std::max(worst, unitary_defect(m));
    return worst;
}

bool UnitaryRep::faithful() const {
    if (!table_mode()) throw SizeExceeded("faithfulness check needs the full image table");
    std::set<std::vector<std::uint32_t>> seen;
    for (const Monomial& m : table_) {
        std::vector<std::uint32_t> key;
        key.reserve(2 * m.dim());
        for (std::uint32_t j = 0; j < m.dim(); ++j) {
            key.push_back(m.row(j));
            key.push_back(m.phase(j));
        }
        seen.insert(std::move(key));
    }
    return seen.size() == table_.size();
}

Character character(const UnitaryRep& rep, const ConjugacyClasses& classes) {
    Character chi;
    chi.dimension = rep.dimension();
    chi.values.reserve(classes.count());
    for (std::size_t i = 0; i < classes.count(); ++i) {
        const Perm& x = classes.representative(i);
        if (x.degree() != rep.source().degree() || !rep.source().contains(x))
            throw SourceMismatch("class representatives lie outside the representation's source");
        chi.values.push_back(rep.image(x).trace());
    }
    return chi;
}

UnitaryRep induced_rep(const PermGroup& n, const SubgroupHandle& a, const LinearCharacter& chi,
                       const Limits& lim) {
    if (chi.source().degree() != a.group.degree() ||
        chi.source().generators() != a.group.generators())
        throw SourceMismatch("character source is not the given subgroup");
    if (a.parent.degree() != n.degree() || a.parent.generators() != n.generators())
        throw SourceMismatch("subgroup handle does not live in the inducing group");
    for (const Perm& g : n.generators())
        for (const Perm& x : a.group.generators())
            if (!a.group.contains(x.conjugated_by(g)))
                throw NotNormal("inducing subgroup is not normal");
    std::uint64_t m = n.order() / a.group.order();
    if (m > 64) throw SizeExceeded("induction index exceeds 64");

    // Breadth-first coset transversal; deterministic given the
    // generator order.
    std::vector<Perm> reps{Perm::identity(n.degree())};
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (const Perm& g : n.generators()) {
            Perm c = g * reps[i];
            bool known = false;
            for (const Perm& t : reps)
                if (a.group.contains(t.inverse() * c)) {
                    known = true;
                    break;
                }
            if (!known) reps.push_back(std::move(c));
        }
    }
    if (reps.size() != m) throw error("transversal does not match the subgroup index");

    std::uint32_t dim = static_cast<std::uint32_t>(m);
    auto image_of = [reps, chi, dim](const Perm& u) {
        std::vector<std::uint32_t> rows(dim), phases(dim);
        for (std::uint32_t j = 0; j < dim; ++j) {
            Perm uj = u * reps[j];
            bool found = false;
            for (std::uint32_t i = 0; i < dim; ++i) {
                auto e = chi.try_exponent(reps[i].inverse() * uj);
                if (e) {
                    rows[j] = i;
                    phases[j] = *e;
                    found = true;
                    break;
                }
            }
            if (!found) throw error("transversal is not a coset system");
        }
        return Monomial(chi.root_order(), std::move(rows), std::move(phases));
    };

    std::vector<Monomial> gen_images;
    gen_images.reserve(n.generators().size());
    for (const Perm& g : n.generators()) gen_images.push_back(image_of(g));
    if (n.order() <= UnitaryRep::kTableLimit) return UnitaryRep(n, std::move(gen_images));
    (void)lim;
    return UnitaryRep(n, std::move(gen_images), image_of);
}

UnitaryRep suzuki_sigma(std::uint32_t n, const Limits& lim) {
    if (n < 3 || n > 13 || n % 2 == 0) throw BadParams("sigma needs odd n in [3, 13]");
    std::uint64_t q = std::uint64_t{1} << n;
    PermGroup g = affine_field_group(q);
    Field f(2, n);
    std::uint32_t prim = f.primitive();

    // Translation subgroup generators x -> x + prim^k, a GF(2)-basis.
    std::vector<Perm> tgens;
    std::vector<std::uint32_t> chi_exps;
    for (std::uint32_t k = 0; k < n; ++k) {
        std::uint32_t c = f.pow(prim, k);
        std::vector<Point> img(q);
        for (std::uint32_t x = 0; x < q; ++x) img[x] = f.add(x, c);
        tgens.push_back(Perm(std::move(img)));
        chi_exps.push_back(f.trace(c));
    }

    if (n <= 5) {
        SubgroupHandle a(g, tgens);
        LinearCharacter chi(a.group, 2, chi_exps);
        return induced_rep(g, a, chi, lim);
    }

    // Past the induction-index cap: the transversal is the power
    // sequence of the multiplication generator M, and for
    // u = (x -> lam*x + c) with lam = prim^e the entry in column j
    // sits at row i = e+j mod q-1 with sign (-1)^trace(prim^(-i) c).
    std::uint32_t qm1 = static_cast<std::uint32_t>(q - 1);
    std::vector<std::uint32_t> powneg(qm1);
    std::uint32_t ginv = f.inv(prim);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < qm1; ++i) {
        powneg[i] = cur;
        cur = f.mul(cur, ginv);
    }
    auto eval = [f, powneg, qm1](const Perm& u) {
        std::uint32_t c = u(0);
        std::uint32_t lam = f.add(u(1), c);
        std::uint32_t e = f.dlog(lam);
        std::vector<std::uint32_t> rows(qm1), phases(qm1);
        for (std::uint32_t j = 0; j < qm1; ++j) {
            std::uint32_t i = (e + j) % qm1;
            rows[j] = i;
            phases[j] = f.trace(f.mul(powneg[i], c));
        }
        return Monomial(2, std::move(rows), std::move(phases));
    };
    std::vector<Monomial> gen_images;
    for (const Perm& gp : g.generators()) gen_images.push_back(eval(gp));
    return UnitaryRep(g, std::move(gen_images), eval);
}

}  // namespace cwcell
