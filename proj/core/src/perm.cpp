#include "cwcell/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cwcell {

Perm::Perm(Point degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point y : img_) {
        if (y >= img_.size() || seen[y])
            throw BadParams("image vector is not a bijection");
        seen[y] = true;
    }
}

bool Perm::is_identity() const {
    for (Point x = 0; x < degree(); ++x)
        if (img_[x] != x) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<Point> inv(img_.size());
    for (Point x = 0; x < degree(); ++x) inv[img_[x]] = x;
    return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
    std::vector<Point> c(a.degree());
    for (Point x = 0; x < a.degree(); ++x) c[x] = a.img_[b.img_[x]];
    Perm r{Point{0}};
    r.img_ = std::move(c);
    return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
    if (g.degree() != degree()) throw DegreeMismatch(g.degree(), degree());
    // (g p g^{-1})(g(x)) = g(p(x)), computed without forming g^{-1}.
    std::vector<Point> c(degree());
    for (Point x = 0; x < degree(); ++x) c[g.img_[x]] = g.img_[img_[x]];
    Perm r{Point{0}};
    r.img_ = std::move(c);
    return r;
}

std::vector<std::vector<Point>> Perm::cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(degree(), false);
    for (Point s = 0; s < degree(); ++s) {
        if (seen[s] || img_[s] == s) continue;
        std::vector<Point> cyc;
        for (Point x = s; !seen[x]; x = img_[x]) {
            seen[x] = true;
            cyc.push_back(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<Point> Perm::cycle_type() const {
    std::vector<Point> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<Point>(c.size()));
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

std::uint64_t Perm::order() const {
    std::uint64_t ord = 1;
    for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<std::uint64_t>(c.size()));
    return ord;
}

std::string Perm::cycle_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << (c[i] + 1);
        }
        os << ')';
    }
    return os.str();
}

Perm Perm::parse_cycles(Point degree, const std::string& text) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    // Cycles must be disjoint and list each point at most once.
    std::vector<char> used(degree, 0);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '('", i);
        ++i;
        std::vector<Point> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected point number", i);
            std::size_t num_at = i;
            std::uint64_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > degree) throw ParseError("point exceeds degree", i);
                ++i;
            }
            if (v == 0) throw ParseError("points are 1-based", i);
            Point pt = static_cast<Point>(v - 1);
            if (used[pt]) throw ParseError("point repeated", num_at);
            used[pt] = 1;
            cyc.push_back(pt);
            skip_ws();
        }
        if (i == text.size()) throw ParseError("unterminated cycle", i);
        ++i;  // ')'
        for (std::size_t k = 0; cyc.size() >= 2 && k < cyc.size(); ++k)
            img[cyc[k]] = cyc[(k + 1) % cyc.size()];
        skip_ws();
    }
    return Perm(std::move(img));
}

bool Perm::operator<(const Perm& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return img_ < o.img_;
}

std::size_t PermHash::operator()(const Perm& p) const {
    // FNV-1a over the image words; stable across platforms with the
    // same Point width.
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace cwcell
