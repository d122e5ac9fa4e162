#include "cwcell/matrix_group.hpp"

#include <unordered_map>

namespace cwcell {

Mat mat_identity(std::uint32_t dim) {
    Mat m(static_cast<std::size_t>(dim) * dim, 0);
    for (std::uint32_t i = 0; i < dim; ++i) m[i * dim + i] = 1;
    return m;
}

Mat mat_mul(const Field& f, std::uint32_t dim, const Mat& a, const Mat& b) {
    Mat c(static_cast<std::size_t>(dim) * dim, 0);
    for (std::uint32_t i = 0; i < dim; ++i)
        for (std::uint32_t k = 0; k < dim; ++k) {
            std::uint32_t aik = a[i * dim + k];
            if (aik == 0) continue;
            for (std::uint32_t j = 0; j < dim; ++j)
                c[i * dim + j] = f.add(c[i * dim + j], f.mul(aik, b[k * dim + j]));
        }
    return c;
}

std::vector<std::uint32_t> mat_apply(const Field& f, std::uint32_t dim, const Mat& m,
                                     const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> w(dim, 0);
    for (std::uint32_t i = 0; i < dim; ++i)
        for (std::uint32_t j = 0; j < dim; ++j)
            w[i] = f.add(w[i], f.mul(m[i * dim + j], v[j]));
    return w;
}

bool mat_invertible(const Field& f, std::uint32_t dim, const Mat& m) {
    Mat a = m;
    for (std::uint32_t col = 0; col < dim; ++col) {
        std::uint32_t pivot = dim;
        for (std::uint32_t r = col; r < dim; ++r)
            if (a[r * dim + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == dim) return false;
        if (pivot != col)
            for (std::uint32_t j = 0; j < dim; ++j)
                std::swap(a[pivot * dim + j], a[col * dim + j]);
        std::uint32_t s = f.inv(a[col * dim + col]);
        for (std::uint32_t j = 0; j < dim; ++j) a[col * dim + j] = f.mul(s, a[col * dim + j]);
        for (std::uint32_t r = 0; r < dim; ++r) {
            if (r == col || a[r * dim + col] == 0) continue;
            std::uint32_t factor = a[r * dim + col];
            for (std::uint32_t j = 0; j < dim; ++j)
                a[r * dim + j] = f.sub(a[r * dim + j], f.mul(factor, a[col * dim + j]));
        }
    }
    return true;
}

namespace {

std::uint64_t pack(const std::vector<std::uint32_t>& v) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < v.size(); ++i) key |= static_cast<std::uint64_t>(v[i]) << (16 * i);
    return key;
}

std::vector<std::uint32_t> unpack(std::uint64_t key, std::uint32_t dim) {
    std::vector<std::uint32_t> v(dim);
    for (std::uint32_t i = 0; i < dim; ++i) v[i] = (key >> (16 * i)) & 0xffff;
    return v;
}

// Scale so the first nonzero coordinate is 1; the zero vector is
// rejected by callers before reaching here.
void normalize(const Field& f, std::vector<std::uint32_t>& v) {
    for (std::uint32_t c : v) {
        if (c == 0) continue;
        if (c != 1) {
            std::uint32_t s = f.inv(c);
            for (auto& x : v) x = f.mul(s, x);
        }
        return;
    }
    throw ActionNotClosed("matrix sends a point to zero");
}

bool is_projective_scalar(const Field& f, std::uint32_t dim, const Mat& m) {
    std::uint32_t d = m[0];
    if (d == 0) return false;
    for (std::uint32_t i = 0; i < dim; ++i)
        for (std::uint32_t j = 0; j < dim; ++j)
            if (m[i * dim + j] != (i == j ? d : 0u)) return false;
    return true;
}

struct MatHash {
    std::size_t operator()(const Mat& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint32_t x : m) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

std::vector<std::uint64_t> projective_points(const Field& f, std::uint32_t dim) {
    // Leading coordinate 1, earlier coordinates 0, later ones free;
    // free coordinates run lexicographically with the last varying
    // fastest.
    std::vector<std::uint64_t> pts;
    std::vector<std::uint32_t> v(dim, 0);
    for (std::uint32_t lead = 0; lead < dim; ++lead) {
        std::fill(v.begin(), v.end(), 0u);
        v[lead] = 1;
        std::uint32_t free = dim - lead - 1;
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < free; ++i) count *= f.q();
        for (std::uint64_t n = 0; n < count; ++n) {
            std::uint64_t rest = n;
            for (std::uint32_t i = dim; i-- > lead + 1;) {
                v[i] = static_cast<std::uint32_t>(rest % f.q());
                rest /= f.q();
            }
            pts.push_back(pack(v));
        }
    }
    return pts;
}

std::vector<std::uint64_t> ovoid_points(const MatrixGroupSpec& spec) {
    const Field& f = spec.field;
    std::vector<std::uint32_t> start(spec.dim, 0);
    start[spec.dim - 1] = 1;
    std::vector<std::uint64_t> orbit{pack(start)};
    std::unordered_map<std::uint64_t, std::uint32_t> seen{{orbit[0], 0}};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        auto v = unpack(orbit[i], spec.dim);
        for (const Mat& g : spec.gens) {
            auto w = mat_apply(f, spec.dim, g, v);
            normalize(f, w);
            std::uint64_t key = pack(w);
            if (seen.emplace(key, static_cast<std::uint32_t>(orbit.size())).second)
                orbit.push_back(key);
        }
    }
    return orbit;
}

}  // namespace

std::vector<std::uint64_t> matrix_action_points(const MatrixGroupSpec& spec,
                                                MatrixAction action) {
    if (spec.dim > 4) throw SizeExceeded("matrix actions support dimension at most 4");
    switch (action) {
        case MatrixAction::ProjectivePoints:
            return projective_points(spec.field, spec.dim);
        case MatrixAction::Ovoid:
            return ovoid_points(spec);
        case MatrixAction::Cosets:
            throw BadParams("coset action points are group elements, not vectors");
    }
    throw BadParams("unknown matrix action");
}

PermGroup matrix_to_perm(const MatrixGroupSpec& spec, MatrixAction action, bool require_faithful,
                         const Limits& lim) {
    const Field& f = spec.field;
    if (spec.dim > 4 && action != MatrixAction::Cosets)
        throw SizeExceeded("matrix actions support dimension at most 4");
    for (const Mat& g : spec.gens) {
        if (g.size() != static_cast<std::size_t>(spec.dim) * spec.dim)
            throw BadParams("generator matrix has wrong shape");
        if (!mat_invertible(f, spec.dim, g)) throw ActionNotClosed("singular generator matrix");
    }

    if (action == MatrixAction::Cosets) {
        // Closure of the generators, then left multiplication on the
        // element list.
        std::vector<Mat> elems{mat_identity(spec.dim)};
        std::unordered_map<Mat, std::uint32_t, MatHash> index{{elems[0], 0}};
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (const Mat& g : spec.gens) {
                Mat n = mat_mul(f, spec.dim, g, elems[i]);
                if (index.emplace(n, static_cast<std::uint32_t>(elems.size())).second) {
                    elems.push_back(std::move(n));
                    if (elems.size() > lim.enum_limit)
                        throw OrderExceedsLimit(elems.size(), lim.enum_limit);
                }
            }
        }
        std::vector<Perm> pgens;
        for (const Mat& g : spec.gens) {
            std::vector<Point> img(elems.size());
            for (std::size_t i = 0; i < elems.size(); ++i)
                img[i] = index.at(mat_mul(f, spec.dim, g, elems[i]));
            pgens.emplace_back(std::move(img));
        }
        return PermGroup(static_cast<Point>(elems.size()), std::move(pgens));
    }

    auto points = matrix_action_points(spec, action);
    std::vector<Perm> pgens;
    for (const Mat& g : spec.gens) {
        Perm pg = matrix_perm_on_points(f, spec.dim, g, points);
        if (require_faithful && pg.is_identity() && !is_projective_scalar(f, spec.dim, g))
            throw ActionNotFaithful("non-scalar generator acts as identity");
        pgens.push_back(std::move(pg));
    }
    return PermGroup(static_cast<Point>(points.size()), std::move(pgens));
}

Perm matrix_perm_on_points(const Field& f, std::uint32_t dim, const Mat& m,
                           const std::vector<std::uint64_t>& pts) {
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    for (std::size_t i = 0; i < pts.size(); ++i)
        index.emplace(pts[i], static_cast<std::uint32_t>(i));
    std::vector<Point> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto w = mat_apply(f, dim, m, unpack(pts[i], dim));
        normalize(f, w);
        auto it = index.find(pack(w));
        if (it == index.end()) throw ActionNotClosed("image point outside the action set");
        img[i] = it->second;
    }
    return Perm(std::move(img));
}

}  // namespace cwcell
