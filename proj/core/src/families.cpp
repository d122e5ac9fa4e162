#include "cwcell/families.hpp"

#include <numeric>
#include <unordered_map>

#include "cwcell/gf.hpp"
#include "cwcell/matrix_group.hpp"

namespace cwcell {

namespace {

Perm cycle_on(Point degree, Point from, Point len) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point i = 0; i < len; ++i) img[from + i] = from + (i + 1) % len;
    return Perm(std::move(img));
}

}  // namespace

PermGroup cyclic_group(std::uint64_t n) {
    if (n == 0 || n > 100000) throw BadParams("cyclic order out of range");
    Point deg = static_cast<Point>(n == 1 ? 1 : n);
    std::vector<Perm> gens;
    if (n > 1) gens.push_back(cycle_on(deg, 0, deg));
    return PermGroup(deg, gens).with_tag({"cyclic", {n}});
}

PermGroup elem_abelian_group(std::uint64_t p, std::uint64_t k) {
    if (!is_prime(p)) throw NotPrime(p);
    if (k == 0 || p * k > 100000) throw BadParams("elementary abelian rank out of range");
    Point deg = static_cast<Point>(p * k);
    std::vector<Perm> gens;
    for (std::uint64_t i = 0; i < k; ++i)
        gens.push_back(cycle_on(deg, static_cast<Point>(i * p), static_cast<Point>(p)));
    return PermGroup(deg, gens).with_tag({"elem_abelian", {p, k}});
}

PermGroup dihedral_group(std::uint64_t n) {
    if (n < 3 || n > 100000) throw BadParams("dihedral parameter must be in [3, 1e5]");
    Point deg = static_cast<Point>(n);
    Perm r = cycle_on(deg, 0, deg);
    std::vector<Point> img(deg);
    for (Point i = 0; i < deg; ++i) img[i] = static_cast<Point>((n - i) % n);
    return PermGroup(deg, {r, Perm(std::move(img))}).with_tag({"dihedral", {n}});
}

PermGroup semidihedral_group(std::uint64_t order) {
    // Affine model x -> ux + j on Z/2^(k-1) with u = 2^(k-2) - 1; u^2
    // is 1 mod 2^(k-1), and conjugating the translation x -> x+1 by
    // x -> ux multiplies the step by u, which is the semidihedral
    // relation.
    std::uint64_t k = 0;
    for (std::uint64_t t = order; t > 1; t >>= 1) ++k;
    if ((std::uint64_t{1} << k) != order || k < 4 || k > 16)
        throw BadParams("semidihedral order must be 2^k with 4 <= k <= 16");
    std::uint64_t half = order / 2;
    std::uint64_t u = half / 2 - 1;
    Point deg = static_cast<Point>(half);
    std::vector<Point> rot(deg), mul(deg);
    for (Point x = 0; x < deg; ++x) {
        rot[x] = static_cast<Point>((x + 1) % half);
        mul[x] = static_cast<Point>((u * x) % half);
    }
    return PermGroup(deg, {Perm(std::move(rot)), Perm(std::move(mul))})
        .with_tag({"semidihedral", {order}});
}

PermGroup symmetric_group(std::uint64_t n) {
    if (n == 0 || n > 20) throw BadParams("symmetric degree must be in [1, 20]");
    Point deg = static_cast<Point>(n);
    std::vector<Perm> gens;
    if (n >= 2) {
        std::vector<Point> t(deg);
        std::iota(t.begin(), t.end(), Point{0});
        std::swap(t[0], t[1]);
        gens.emplace_back(std::move(t));
    }
    if (n >= 3) gens.push_back(cycle_on(deg, 0, deg));
    return PermGroup(deg, gens).with_tag({"symmetric", {n}});
}

PermGroup alternating_group(std::uint64_t n) {
    if (n == 0 || n > 20) throw BadParams("alternating degree must be in [1, 20]");
    Point deg = static_cast<Point>(std::max<std::uint64_t>(n, 1));
    std::vector<Perm> gens;
    if (n >= 3) {
        std::vector<Point> c(deg);
        std::iota(c.begin(), c.end(), Point{0});
        c[0] = 1;
        c[1] = 2;
        c[2] = 0;
        gens.emplace_back(std::move(c));
    }
    if (n >= 4) {
        // Full cycle for odd n, (n-1)-cycle avoiding point 0 for even n.
        gens.push_back(n % 2 ? cycle_on(deg, 0, deg) : cycle_on(deg, 1, deg - 1));
    }
    return PermGroup(deg, gens).with_tag({"alternating", {n}});
}

std::vector<Perm> sylow2_symmetric_generators(std::uint64_t n) {
    if (n == 0 || n > 4096) throw BadParams("sylow2_symmetric degree must be in [1, 4096]");
    Point deg = static_cast<Point>(n);
    std::vector<Perm> gens;
    // One iterated-wreath tower per binary block of n, highest block
    // first.  Within a block of size 2^a at offset o the generator g_i
    // swaps x with x XOR 2^i on the first 2^(i+1) block points; g_0
    // through g_(i-1) together with their g_i-conjugates generate the
    // wreath square at each level.
    Point offset = 0;
    for (int a = 12; a >= 0; --a) {
        if (!(n & (std::uint64_t{1} << a))) continue;
        Point block = Point{1} << a;
        for (int i = 0; i < a; ++i) {
            std::vector<Point> img(deg);
            std::iota(img.begin(), img.end(), Point{0});
            for (Point x = 0; x < (Point{2} << i); ++x)
                img[offset + x] = offset + (x ^ (Point{1} << i));
            gens.emplace_back(std::move(img));
        }
        offset += block;
    }
    return gens;
}

PermGroup sylow2_symmetric_group(std::uint64_t n) {
    return PermGroup(static_cast<Point>(n), sylow2_symmetric_generators(n))
        .with_tag({"sylow2_symmetric", {n}});
}

PermGroup thevenaz_group() {
    // Points are (Z/4)^3 packed as a + 4b + 16c.  Translations by
    // (1,3,0) and (0,1,3) generate the sum-zero sublattice V of order
    // 16, and the two coordinate permutations generate Sigma_3 on top.
    auto pack = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        return static_cast<Point>(a + 4 * b + 16 * c);
    };
    auto make = [&](auto&& f) {
        std::vector<Point> img(64);
        for (std::uint32_t a = 0; a < 4; ++a)
            for (std::uint32_t b = 0; b < 4; ++b)
                for (std::uint32_t c = 0; c < 4; ++c) img[pack(a, b, c)] = f(a, b, c);
        return Perm(std::move(img));
    };
    Perm t1 = make([&](auto a, auto b, auto c) { return pack((a + 1) % 4, (b + 3) % 4, c); });
    Perm t2 = make([&](auto a, auto b, auto c) { return pack(a, (b + 1) % 4, (c + 3) % 4); });
    Perm swap01 = make([&](auto a, auto b, auto c) { return pack(b, a, c); });
    Perm rot = make([&](auto a, auto b, auto c) { return pack(c, a, b); });
    PermGroup g(64, {t1, t2, swap01, rot});
    if (g.order() != 96) throw error("thevenaz construction order check failed");
    return g.with_tag({"thevenaz", {}});
}

PermGroup psl2_group(std::uint64_t q, const Limits& lim) {
    std::uint64_t r = 0;
    std::uint32_t e = 0;
    if (!prime_power(q, r, e) || q < 4 || q > 65536)
        throw BadParams("psl2 parameter must be a prime power in [4, 2^16]");
    Field f(static_cast<std::uint32_t>(r), e);
    std::uint32_t lam = f.primitive();
    Mat a{1, 1, 0, 1};
    Mat b{lam, 0, 0, f.inv(lam)};
    Mat c{0, f.neg(1), 1, 0};
    MatrixGroupSpec spec{f, 2, {a, b, c}};
    PermGroup g = matrix_to_perm(spec, MatrixAction::ProjectivePoints, false, lim);
    std::uint64_t expect = q * (q - 1) * (q + 1) / (r == 2 ? 1 : 2);
    if (g.order() != expect) throw error("psl2 construction order check failed");
    return g.with_tag({"psl2", {q}});
}

PermGroup psl3_3_group(const Limits& lim) {
    Field f(3, 1);
    Mat e12{1, 1, 0, 0, 1, 0, 0, 0, 1};
    Mat cyc{0, 0, 1, 1, 0, 0, 0, 1, 0};
    MatrixGroupSpec spec{f, 3, {e12, cyc}};
    PermGroup g = matrix_to_perm(spec, MatrixAction::ProjectivePoints, false, lim);
    if (g.order() != 5616) throw error("psl3_3 construction order check failed");
    return g.with_tag({"psl3_3", {}});
}

namespace {

struct SzData {
    std::uint64_t q;
    std::uint32_t n;
    Field f;
    std::int64_t mu;     // 2^m with n = 2m+1
    std::int64_t theta;  // twist exponent 2^(m+1); theta^2 acts as squaring
};

SzData sz_data(std::uint64_t q) {
    std::uint32_t n = 0;
    for (std::uint64_t t = q; t > 1; t >>= 1) ++n;
    if ((std::uint64_t{1} << n) != q || n % 2 == 0 || n < 3 || n > 13)
        throw BadParams("suzuki parameter must be 2^n with n odd, 3 <= n <= 13");
    std::uint32_t m = (n - 1) / 2;
    return SzData{q, n, Field(2, n), std::int64_t{1} << m, std::int64_t{1} << (m + 1)};
}

// Unipotent family S(a,b), lower triangular with S(a,b) S(c,d) =
// S(a+c, b+d+a*c^theta); involutions are exactly a = 0, and
// {S(0,b)} is simultaneously the center, the Frattini quotient
// complement's mirror, and the subgroup generated by involutions.
Mat sz_unipotent(const SzData& d, std::uint32_t a, std::uint32_t b) {
    const Field& f = d.f;
    std::uint32_t at = f.pow(a, d.theta);
    std::uint32_t a1t = f.mul(a, at);   // a^(1+theta)
    std::uint32_t a2t = f.mul(a, a1t);  // a^(2+theta)
    return Mat{1, 0, 0, 0,
               a, 1, 0, 0,
               f.add(a1t, b), at, 1, 0,
               f.add(f.add(a2t, f.mul(a, b)), f.pow(b, d.theta)), b, a, 1};
}

// Torus element: conjugation sends S(a,b) to S(la, l^(1+theta) b),
// and 1+theta is invertible mod q-1, so the torus is transitive on
// the nontrivial involutions.
Mat sz_torus(const SzData& d) {
    const Field& f = d.f;
    std::uint32_t lam = f.primitive();
    return Mat{f.pow(lam, -(1 + d.mu)), 0, 0, 0,
               0, f.pow(lam, -d.mu), 0, 0,
               0, 0, f.pow(lam, d.mu), 0,
               0, 0, 0, f.pow(lam, 1 + d.mu)};
}

Mat sz_flip() {
    return Mat{0, 0, 0, 1,
               0, 0, 1, 0,
               0, 1, 0, 0,
               1, 0, 0, 0};
}

}  // namespace

PermGroup suzuki_group(std::uint64_t q, const Limits& lim) {
    SzData d = sz_data(q);
    if (q * q + 1 > 5'000'000) throw SizeExceeded("suzuki ovoid too large to realize");
    MatrixGroupSpec spec{d.f, 4, {sz_unipotent(d, 1, 0), sz_torus(d), sz_flip()}};
    auto pts = matrix_action_points(spec, MatrixAction::Ovoid);
    if (pts.size() != q * q + 1) throw error("suzuki ovoid orbit has unexpected size");
    PermGroup g = matrix_to_perm(spec, MatrixAction::Ovoid, true, lim);
    if (g.order() != q * q * (q * q + 1) * (q - 1))
        throw error("suzuki construction order check failed");
    return g.with_tag({"suzuki", {q}});
}

SuzukiModel suzuki_model(std::uint64_t q, const Limits& lim) {
    SzData d = sz_data(q);
    if (q > 32) throw SizeExceeded("suzuki model tables are built through q = 32 only");
    Mat tor = sz_torus(d);
    MatrixGroupSpec spec{d.f, 4, {sz_unipotent(d, 1, 0), tor, sz_flip()}};
    auto pts = matrix_action_points(spec, MatrixAction::Ovoid);
    if (pts.size() != q * q + 1) throw error("suzuki ovoid orbit has unexpected size");
    PermGroup g = matrix_to_perm(spec, MatrixAction::Ovoid, true, lim).with_tag({"suzuki", {q}});
    if (g.order() != q * q * (q * q + 1) * (q - 1))
        throw error("suzuki construction order check failed");

    // The ovoid orbit starts at e4, the common eigenvector of the
    // lower triangular unipotents and the torus.
    Point inf = 0;
    // e1, in the orbit because the flip exchanges it with e4.
    Point zero = 0;
    {
        bool found = false;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (pts[i] == 1) {
                zero = static_cast<Point>(i);
                found = true;
                break;
            }
        if (!found) throw error("suzuki model is missing the zero point");
    }

    std::uint32_t lam = d.f.primitive();
    std::vector<Perm> sgens;
    std::uint32_t ak = 1;
    for (std::uint32_t k = 0; k < d.n; ++k) {
        sgens.push_back(matrix_perm_on_points(d.f, 4, sz_unipotent(d, ak, 0), pts));
        ak = d.f.mul(ak, lam);
    }
    Perm torus = matrix_perm_on_points(d.f, 4, tor, pts);

    // S fixes exactly one ovoid point, which pins N_G(S) inside the
    // point stabilizer.
    for (Point p = 0; p < g.degree(); ++p) {
        bool fixed_by_all = true;
        for (const Perm& s : sgens)
            if (s(p) != p) {
                fixed_by_all = false;
                break;
            }
        if (fixed_by_all != (p == inf))
            throw error("suzuki sylow fixed points are not the single expected point");
    }
    if (torus(inf) != inf || torus(zero) != zero)
        throw error("suzuki torus moves a point it must fix");
    if (PermGroup(g.degree(), sgens).order() != q * q)
        throw error("suzuki sylow generators close up to the wrong order");
    {
        std::vector<Perm> borel = sgens;
        borel.push_back(torus);
        if (PermGroup(g.degree(), borel).order() != q * q * (q - 1))
            throw error("suzuki borel generators close up to the wrong order");
    }

    std::vector<Perm> unip;
    unip.reserve(static_cast<std::size_t>(q) * q);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ab(pts.size(), {0, 0});
    std::vector<bool> hit(pts.size(), false);
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
            Perm s = matrix_perm_on_points(d.f, 4, sz_unipotent(d, a, b), pts);
            Point img = s(zero);
            if (img == inf || hit[img])
                throw error("suzuki unipotent orbit through the zero point is not regular");
            hit[img] = true;
            ab[img] = {a, b};
            unip.push_back(std::move(s));
        }

    return SuzukiModel{q,   d.n,  d.f,           std::move(g),   std::move(sgens),
                       std::move(torus), inf, zero, std::move(unip), std::move(ab)};
}

PermGroup affine_field_group(std::uint64_t q) {
    std::uint64_t r = 0;
    std::uint32_t e = 0;
    if (!prime_power(q, r, e) || q < 3 || q > 65536)
        throw BadParams("affine parameter must be a prime power in [3, 2^16]");
    Field f(static_cast<std::uint32_t>(r), e);
    std::uint32_t gen = f.primitive();
    std::vector<Point> add1(q), mulg(q);
    for (std::uint32_t x = 0; x < q; ++x) {
        add1[x] = f.add(x, 1);
        mulg[x] = f.mul(gen, x);
    }
    PermGroup g(static_cast<Point>(q), {Perm(std::move(add1)), Perm(std::move(mulg))});
    if (g.order() != q * (q - 1)) throw error("affine construction order check failed");
    return g.with_tag({"affine", {q}});
}

PermGroup semidirect_product(const PermGroup& h, const PermGroup& k,
                             const std::vector<std::vector<Perm>>& images, const Limits& lim) {
    const auto& hg = h.generators();
    const auto& kg = k.generators();
    if (images.size() != kg.size())
        throw BadParams("semidirect action table needs one row per acting generator");
    for (const auto& row : images) {
        if (row.size() != hg.size())
            throw BadParams("semidirect action row needs one image per normal-side generator");
        for (const Perm& im : row)
            if (!h.contains(im))
                throw ActionNotAutomorphism("generator image lies outside the normal side");
    }
    if (h.order() > 10000 || k.order() > 10000)
        throw OrderExceedsLimit(std::max(h.order(), k.order()), 10000);
    if (h.order() * k.order() > lim.enum_limit)
        throw OrderExceedsLimit(h.order() * k.order(), lim.enum_limit);

    // Element lists with BFS so each automorphism extends along
    // discovery edges; checking every (generator, element) product
    // afterwards makes the extension rigorous, not just well-defined
    // on a spanning tree.
    auto enumerate = [](const PermGroup& g) {
        std::vector<Perm> elems{Perm::identity(g.degree())};
        std::unordered_map<Perm, std::uint32_t, PermHash> index{{elems[0], 0}};
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (const Perm& s : g.generators()) {
                Perm n = s * elems[i];
                if (index.emplace(n, static_cast<std::uint32_t>(elems.size())).second)
                    elems.push_back(std::move(n));
            }
        return std::pair(std::move(elems), std::move(index));
    };
    auto [helems, hindex] = enumerate(h);
    auto [kelems, kindex] = enumerate(k);
    std::uint32_t ho = static_cast<std::uint32_t>(helems.size());
    std::uint32_t ko = static_cast<std::uint32_t>(kelems.size());

    // phi[t] as an index map over H's elements.
    auto extend_automorphism = [&](const std::vector<Perm>& gen_images) {
        std::unordered_map<Perm, Perm, PermHash> phi;
        phi.emplace(Perm::identity(h.degree()), Perm::identity(h.degree()));
        for (std::size_t i = 0; i < helems.size(); ++i)
            for (std::size_t gi = 0; gi < hg.size(); ++gi) {
                Perm n = hg[gi] * helems[i];
                if (!phi.contains(n)) phi.emplace(n, gen_images[gi] * phi.at(helems[i]));
            }
        // Multiplicativity on every generator edge proves phi is a
        // homomorphism on all of H by induction on word length.
        for (const Perm& x : helems)
            for (std::size_t gi = 0; gi < hg.size(); ++gi)
                if (phi.at(hg[gi] * x) != gen_images[gi] * phi.at(x))
                    throw ActionNotAutomorphism("generator images do not extend to H");
        std::vector<std::uint32_t> table(ho);
        std::vector<bool> hit(ho, false);
        for (std::uint32_t i = 0; i < ho; ++i) {
            auto it = hindex.find(phi.at(helems[i]));
            if (it == hindex.end()) throw ActionNotAutomorphism("image escapes H");
            table[i] = it->second;
            hit[it->second] = true;
        }
        for (bool b : hit)
            if (!b) throw ActionNotAutomorphism("generator images are not bijective on H");
        return table;
    };

    std::vector<std::vector<std::uint32_t>> phi_gen;
    for (const auto& row : images) phi_gen.push_back(extend_automorphism(row));

    // phi on all of K, by composing along K's discovery tree, then the
    // same generator-edge verification for the map K -> Aut(H).
    std::vector<std::vector<std::uint32_t>> phi_k(ko);
    {
        std::vector<std::uint32_t> ident(ho);
        std::iota(ident.begin(), ident.end(), 0u);
        phi_k[0] = ident;
        std::vector<bool> known(ko, false);
        known[0] = true;
        for (std::size_t i = 0; i < kelems.size(); ++i)
            for (std::size_t ti = 0; ti < kg.size(); ++ti) {
                std::uint32_t ni = kindex.at(kg[ti] * kelems[i]);
                if (known[ni]) continue;
                known[ni] = true;
                phi_k[ni].resize(ho);
                for (std::uint32_t x = 0; x < ho; ++x) phi_k[ni][x] = phi_gen[ti][phi_k[i][x]];
            }
        for (std::uint32_t i = 0; i < ko; ++i)
            for (std::size_t ti = 0; ti < kg.size(); ++ti) {
                std::uint32_t ni = kindex.at(kg[ti] * kelems[i]);
                for (std::uint32_t x = 0; x < ho; ++x)
                    if (phi_k[ni][x] != phi_gen[ti][phi_k[i][x]])
                        throw ActionNotAutomorphism("action table is not a homomorphism on K");
            }
    }

    // Left-regular action on pairs h * k, point = k_index * |H| + h_index.
    Point deg = static_cast<Point>(ho * ko);
    std::vector<Perm> gens;
    for (const Perm& a : hg) {
        std::vector<Point> img(deg);
        for (std::uint32_t ki = 0; ki < ko; ++ki)
            for (std::uint32_t hi = 0; hi < ho; ++hi)
                img[ki * ho + hi] = ki * ho + hindex.at(a * helems[hi]);
        gens.emplace_back(std::move(img));
    }
    for (std::size_t ti = 0; ti < kg.size(); ++ti) {
        std::vector<Point> img(deg);
        for (std::uint32_t ki = 0; ki < ko; ++ki) {
            std::uint32_t nk = kindex.at(kg[ti] * kelems[ki]);
            for (std::uint32_t hi = 0; hi < ho; ++hi)
                img[ki * ho + hi] = nk * ho + phi_gen[ti][hi];
        }
        gens.emplace_back(std::move(img));
    }
    PermGroup g(deg, std::move(gens));
    if (g.order() != std::uint64_t{ho} * ko)
        throw error("semidirect regular action order check failed");
    return g.with_tag({"semidirect", {h.order(), k.order()}});
}

const std::vector<BuiltinInfo>& builtin_catalog() {
    static const std::vector<BuiltinInfo> catalog = {
        {"cyclic", "n", "cyclic group of order n"},
        {"elem_abelian", "p:k", "elementary abelian group (Z/p)^k"},
        {"dihedral", "n", "dihedral group of order 2n on n points"},
        {"semidihedral", "2^k", "semidihedral group of the given order, k >= 4"},
        {"symmetric", "n", "symmetric group on n points"},
        {"alternating", "n", "alternating group on n points"},
        {"sylow2_symmetric", "n", "Sylow 2-subgroup of the symmetric group on n points"},
        {"thevenaz", "", "order-96 extension of Sigma_3 by the sum-zero sublattice of (Z/4)^3"},
        {"psl2", "q", "PSL_2(q) on the projective line, q a prime power >= 4"},
        {"psl3_3", "", "PSL_3(3) on the 13 points of PG(2,3)"},
        {"suzuki", "q", "Suzuki group Sz(q) on its ovoid, q = 2^n, n odd in [3,13]"},
        {"semidirect", "{H}:{K}:{action}", "external semidirect product (structured spec only)"},
    };
    return catalog;
}

PermGroup builtin_group(const std::string& name, const std::vector<std::uint64_t>& params,
                        const Limits& lim) {
    auto want = [&](std::size_t n) {
        if (params.size() != n)
            throw BadParams("builtin '" + name + "' expects " + std::to_string(n) +
                            " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "cyclic") {
        want(1);
        return cyclic_group(params[0]);
    }
    if (name == "elem_abelian") {
        want(2);
        return elem_abelian_group(params[0], params[1]);
    }
    if (name == "dihedral") {
        want(1);
        return dihedral_group(params[0]);
    }
    if (name == "semidihedral") {
        want(1);
        return semidihedral_group(params[0]);
    }
    if (name == "symmetric") {
        want(1);
        return symmetric_group(params[0]);
    }
    if (name == "alternating") {
        want(1);
        return alternating_group(params[0]);
    }
    if (name == "sylow2_symmetric") {
        want(1);
        return sylow2_symmetric_group(params[0]);
    }
    if (name == "thevenaz") {
        want(0);
        return thevenaz_group();
    }
    if (name == "psl2") {
        want(1);
        return psl2_group(params[0], lim);
    }
    if (name == "psl3_3") {
        want(0);
        return psl3_3_group(lim);
    }
    if (name == "suzuki") {
        want(1);
        return suzuki_group(params[0], lim);
    }
    throw BadParams("unknown builtin '" + name + "'");
}

}  // namespace cwcell
