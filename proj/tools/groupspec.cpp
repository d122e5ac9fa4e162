#include "groupspec.hpp"

#include <cctype>
#include <limits>
#include <utility>

#include "cwcell/errors.hpp"

namespace cwcell::tool {

namespace {

constexpr std::uint64_t kMaxDegree = 1'000'000;

bool name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

std::uint64_t parse_uint(const std::string& s, std::size_t base) {
    if (s.empty()) throw ParseError("expected a number", base);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected a digit", base + i);
        std::uint64_t d = static_cast<std::uint64_t>(s[i] - '0');
        if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
            throw ParseError("number too large", base + i);
        v = v * 10 + d;
    }
    return v;
}

// Splits on `delim` outside any braces; returns (piece, absolute offset).
std::vector<std::pair<std::string, std::size_t>> split_top(const std::string& s, char delim,
                                                           std::size_t base) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '{') ++depth;
        if (i < s.size() && s[i] == '}') --depth;
        if (i == s.size() || (depth == 0 && s[i] == delim)) {
            out.emplace_back(s.substr(start, i - start), base + start);
            start = i + 1;
        }
    }
    return out;
}

// Extracts the text between a '{' at position i and its matching '}'.
std::pair<std::string, std::size_t> braced(const std::string& s, std::size_t& i,
                                           std::size_t base) {
    if (i >= s.size() || s[i] != '{') throw ParseError("expected '{'", base + i);
    std::size_t open = i;
    int depth = 0;
    for (; i < s.size(); ++i) {
        if (s[i] == '{') ++depth;
        if (s[i] == '}' && --depth == 0) {
            std::pair<std::string, std::size_t> inner{s.substr(open + 1, i - open - 1),
                                                      base + open + 1};
            ++i;
            return inner;
        }
    }
    throw ParseError("unbalanced '{'", base + open);
}

GroupSpec parse_at(const std::string& s, std::size_t base, const Limits& lim);

std::vector<Perm> parse_perm_list(const std::string& s, std::size_t base, std::uint32_t degree,
                                  const char* what) {
    auto pieces = split_top(s, ',', base);
    std::vector<Perm> out;
    out.reserve(pieces.size());
    for (const auto& [text, off] : pieces) {
        if (text.find_first_not_of(" \t") == std::string::npos)
            throw ParseError(std::string("expected ") + what, off);
        try {
            out.push_back(Perm::parse_cycles(static_cast<Point>(degree), text));
        } catch (const ParseError& e) {
            throw ParseError(e.reason, off + e.position);
        }
    }
    return out;
}

GroupSpec parse_semidirect(const std::string& s, std::size_t i, std::size_t base,
                           const Limits& lim) {
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::Semidirect;

    auto [htext, hoff] = braced(s, i, base);
    spec.factors.push_back(parse_at(htext, hoff, lim));
    if (i >= s.size() || s[i] != ':') throw ParseError("expected ':'", base + i);
    ++i;
    auto [ktext, koff] = braced(s, i, base);
    spec.factors.push_back(parse_at(ktext, koff, lim));
    if (i >= s.size() || s[i] != ':') throw ParseError("expected ':'", base + i);
    ++i;
    auto [atext, aoff] = braced(s, i, base);
    if (i != s.size()) throw ParseError("trailing text after semidirect spec", base + i);

    // The factor groups resolve the degrees and generator counts the
    // action table has to match.
    PermGroup h = spec.factors[0].build(lim);
    PermGroup k = spec.factors[1].build(lim);
    auto blocks = split_top(atext, ';', aoff);
    if (blocks.size() != k.generators().size())
        throw ParseError("action needs one block per generator of the second factor (" +
                             std::to_string(k.generators().size()) + ")",
                         aoff);
    for (const auto& [block, boff] : blocks) {
        std::vector<Perm> images = parse_perm_list(block, boff, h.degree(), "an action image");
        if (images.size() != h.generators().size())
            throw ParseError("action block needs one image per generator of the first factor (" +
                                 std::to_string(h.generators().size()) + ")",
                             boff);
        spec.action.push_back(std::move(images));
    }
    return spec;
}

GroupSpec parse_at(const std::string& s, std::size_t base, const Limits& lim) {
    std::size_t colon = s.find(':');
    std::string kind = s.substr(0, colon == std::string::npos ? s.size() : colon);

    if (kind == "builtin") {
        if (colon == std::string::npos)
            throw ParseError("expected ':' and a family name", base + s.size());
        GroupSpec spec;
        spec.kind = GroupSpec::Kind::Builtin;
        auto pieces = split_top(s.substr(colon + 1), ':', base + colon + 1);
        const auto& [name, noff] = pieces.front();
        if (name.empty()) throw ParseError("expected a family name", noff);
        for (std::size_t j = 0; j < name.size(); ++j)
            if (!name_char(name[j]))
                throw ParseError("family names use lowercase letters, digits and '_'", noff + j);
        spec.name = name;
        for (std::size_t pi = 1; pi < pieces.size(); ++pi)
            spec.params.push_back(parse_uint(pieces[pi].first, pieces[pi].second));
        return spec;
    }

    if (kind == "perm") {
        if (colon == std::string::npos)
            throw ParseError("expected ':' and a degree", base + s.size());
        std::size_t colon2 = s.find(':', colon + 1);
        if (colon2 == std::string::npos)
            throw ParseError("expected ':' and generators", base + s.size());
        GroupSpec spec;
        spec.kind = GroupSpec::Kind::Perm;
        std::uint64_t deg =
            parse_uint(s.substr(colon + 1, colon2 - colon - 1), base + colon + 1);
        if (deg == 0 || deg > kMaxDegree)
            throw ParseError("degree must be between 1 and " + std::to_string(kMaxDegree),
                             base + colon + 1);
        spec.degree = static_cast<std::uint32_t>(deg);
        spec.generators =
            parse_perm_list(s.substr(colon2 + 1), base + colon2 + 1, spec.degree, "a generator");
        return spec;
    }

    if (kind == "semidirect") {
        if (colon == std::string::npos) throw ParseError("expected ':{'", base + s.size());
        return parse_semidirect(s, colon + 1, base, lim);
    }

    throw ParseError("unknown spec kind '" + kind + "' (builtin, perm or semidirect)", base);
}

}  // namespace

std::string GroupSpec::render() const {
    switch (kind) {
        case Kind::Builtin: {
            std::string out = "builtin:" + name;
            for (std::uint64_t p : params) out += ":" + std::to_string(p);
            return out;
        }
        case Kind::Perm: {
            std::string out = "perm:" + std::to_string(degree) + ":";
            for (std::size_t i = 0; i < generators.size(); ++i) {
                if (i) out += ",";
                out += generators[i].cycle_string();
            }
            return out;
        }
        case Kind::Semidirect: {
            std::string out = "semidirect:{" + factors[0].render() + "}:{" + factors[1].render() +
                              "}:{";
            for (std::size_t t = 0; t < action.size(); ++t) {
                if (t) out += ";";
                for (std::size_t a = 0; a < action[t].size(); ++a) {
                    if (a) out += ",";
                    out += action[t][a].cycle_string();
                }
            }
            return out + "}";
        }
    }
    return {};
}

PermGroup GroupSpec::build(const Limits& lim) const {
    switch (kind) {
        case Kind::Builtin:
            return builtin_group(name, params, lim);
        case Kind::Perm:
            return PermGroup(static_cast<Point>(degree), generators);
        case Kind::Semidirect:
            return semidirect_product(factors[0].build(lim), factors[1].build(lim), action, lim);
    }
    throw BadParams("unreachable spec kind");
}

GroupSpec parse_group_spec(const std::string& text, const Limits& lim) {
    return parse_at(text, 0, lim);
}

}  // namespace cwcell::tool
