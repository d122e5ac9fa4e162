#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cwcell/classify.hpp"
#include "cwcell/errors.hpp"
#include "cwcell/families.hpp"
#include "groupspec.hpp"
#include "serialize.hpp"
#include "version.hpp"

namespace {

using cwcell::Branch;
using cwcell::ClassifyOptions;
using cwcell::PermGroup;
using cwcell::TrichotomyVerdict;
using cwcell::tool::GroupSpec;
using cwcell::tool::json;

struct Flags {
    std::string format = "text";
    double tol = 1e-9;
    std::uint64_t enum_limit = 1'000'000;
    std::uint64_t index_limit = 100'000;
    std::uint64_t seed = 0;
    std::string cert_out;
    bool timings = false;
};

ClassifyOptions options_of(const Flags& f) {
    ClassifyOptions opt;
    opt.tolerance = f.tol;
    opt.seed = f.seed;
    opt.limits.enum_limit = f.enum_limit;
    opt.limits.index_limit = f.index_limit;
    return opt;
}

int exit_code(const TrichotomyVerdict& v) {
    return v.branch == Branch::Unknown ? 2 : 0;
}

// Single classification: report json object plus the verdict.
json run_one(const std::string& spec_text, std::uint64_t prime, const Flags& flags,
             TrichotomyVerdict* verdict_out) {
    auto t0 = std::chrono::steady_clock::now();
    GroupSpec spec = cwcell::tool::parse_group_spec(spec_text, options_of(flags).limits);
    PermGroup g = spec.build(options_of(flags).limits);
    auto t1 = std::chrono::steady_clock::now();
    TrichotomyVerdict v = cwcell::classify(g, prime, options_of(flags));
    auto t2 = std::chrono::steady_clock::now();

    json report = cwcell::tool::verdict_to_json(v);
    report["input"] = json{{"prime", prime}, {"spec", spec_text}};
    report["version"] = cwcell::tool::kVersion;
    if (flags.timings) {
        auto ms = [](auto a, auto b) {
            return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
        };
        report["timings_ms"] = json{{"build", ms(t0, t1)}, {"classify", ms(t1, t2)}};
    }
    if (verdict_out) *verdict_out = std::move(v);
    return report;
}

void print_text_report(const json& r, std::ostream& os) {
    const json& v = r.at("verdict");
    os << "group: " << r.at("input").at("spec").get<std::string>() << "\n";
    os << "prime: " << r.at("p").get<std::uint64_t>() << "\n";
    os << "verdict: " << v.at("branch").get<std::string>();
    if (v.contains("criterion")) os << " (criterion " << v.at("criterion").get<std::string>() << ")";
    if (v.contains("aspherical_reason")) os << " (" << v.at("aspherical_reason").get<std::string>() << ")";
    os << "\n";
    os << "reduction:";
    for (const json& st : r.at("reduction"))
        os << " " << st.at("stage").get<std::string>() << "=" << st.at("order").get<std::uint64_t>();
    os << "\n";
    if (r.contains("primes_q")) {
        os << "primes q:";
        for (const json& q : r.at("primes_q")) os << " " << q.get<std::uint64_t>();
        os << "\n";
    }
    if (v.contains("witness_digest"))
        os << "witness: " << v.at("evidence").at("witness").at("provenance").get<std::string>()
           << " dim " << v.at("evidence").at("witness").at("rep").at("dimension").get<std::uint32_t>()
           << " digest " << v.at("witness_digest").get<std::string>() << "\n";
    if (v.contains("diagnostics"))
        for (const json& d : v.at("diagnostics")) os << "diagnostic: " << d.get<std::string>() << "\n";
    if (v.contains("notes"))
        for (const json& n : v.at("notes")) os << "note: " << n.get<std::string>() << "\n";
    os << "certified: " << (r.at("certified").get<bool>() ? "yes" : "no") << "\n";
    if (r.contains("timings_ms"))
        os << "timings_ms: build=" << r.at("timings_ms").at("build").get<std::int64_t>()
           << " classify=" << r.at("timings_ms").at("classify").get<std::int64_t>() << "\n";
}

int write_certificate(const TrichotomyVerdict& v, const std::string& path) {
    if (v.branch != Branch::Torsion || !v.witness) {
        std::cerr << "cwcell: no witness certificate on this branch, --cert-out skipped\n";
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cwcell: cannot write " << path << "\n";
        return 1;
    }
    out << cwcell::tool::certificate_to_json(*v.witness).dump(2) << "\n";
    return 0;
}

int run_batch(const std::string& path, const Flags& flags) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cwcell: cannot read " << path << "\n";
        return 1;
    }
    bool any_error = false, any_unknown = false;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        auto pos = trimmed.find_first_not_of(" \t");
        if (pos == std::string::npos || trimmed[pos] == '#') continue;
        // the prime is the last whitespace-separated token; everything
        // before it is the spec (cycle notation may contain spaces)
        auto end = trimmed.find_last_not_of(" \t");
        auto cut = trimmed.find_last_of(" \t", end);
        json out;
        if (cut == std::string::npos || cut < pos) {
            out = json{{"error", "expected '<spec> <prime>'"}, {"line", line}};
            any_error = true;
        } else {
            std::string spec_text = trimmed.substr(pos, trimmed.find_last_not_of(" \t", cut) + 1 - pos);
            std::string prime_text = trimmed.substr(cut + 1, end - cut);
            try {
                std::uint64_t prime = std::stoull(prime_text);
                TrichotomyVerdict v;
                out = run_one(spec_text, prime, flags, &v);
                if (v.branch == Branch::Unknown) any_unknown = true;
            } catch (const std::exception& e) {
                out = json{{"error", e.what()}, {"line", line}};
                any_error = true;
            }
        }
        std::cout << out.dump() << "\n";
    }
    return any_error ? 1 : (any_unknown ? 2 : 0);
}

int run_reverify(const std::string& path, const Flags& flags) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cwcell: cannot read " << path << "\n";
        return 1;
    }
    json report = json::parse(in, nullptr, false);
    if (report.is_discarded()) {
        std::cerr << "cwcell: " << path << " is not valid JSON\n";
        return 1;
    }
    std::string spec_text = report.at("input").at("spec").get<std::string>();
    std::uint64_t prime = report.at("input").at("prime").get<std::uint64_t>();
    GroupSpec spec = cwcell::tool::parse_group_spec(spec_text, options_of(flags).limits);
    PermGroup g = spec.build(options_of(flags).limits);
    TrichotomyVerdict v = cwcell::tool::verdict_from_json(report, g, options_of(flags).limits);
    bool ok = cwcell::reverify(v, g, prime, options_of(flags).limits);
    if (flags.format == "json")
        std::cout << json{{"reverified", ok}, {"spec", spec_text}, {"prime", prime}}.dump() << "\n";
    else
        std::cout << "reverified: " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite group trichotomy classifier with re-checkable certificates"};
    app.get_formatter()->column_width(28);

    std::string group_text, batch_file, reverify_file;
    std::uint64_t prime = 0;
    bool list_builtins = false;
    Flags flags;

    app.add_option("--group", group_text,
                   "group spec: builtin:..., perm:..., or semidirect:{...}:{...}:{...}");
    app.add_option("--prime", prime, "prime p for the classification");
    app.add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--tol", flags.tol, "numeric tolerance for witness checks")
        ->capture_default_str();
    app.add_option("--enum-limit", flags.enum_limit, "largest group enumerated exactly")
        ->capture_default_str();
    app.add_option("--index-limit", flags.index_limit, "largest coset space enumerated")
        ->capture_default_str();
    app.add_option("--seed", flags.seed, "seed for sampled fallbacks")->capture_default_str();
    app.add_option("--batch", batch_file, "file with one '<spec> <prime>' per line; JSON-lines out");
    app.add_option("--reverify", reverify_file, "re-check a JSON report without re-searching");
    app.add_option("--cert-out", flags.cert_out, "write the witness certificate JSON here");
    app.add_flag("--timings", flags.timings, "include wall-clock timings in reports");
    app.add_flag("--list-builtins", list_builtins, "list builtin families and their parameters");

    CLI11_PARSE(app, argc, argv);

    if (list_builtins) {
        for (const auto& b : cwcell::builtin_catalog()) {
            std::cout << "builtin:" << b.name;
            if (!b.params.empty()) std::cout << ":" << b.params;
            std::cout << "\n    " << b.summary << "\n";
        }
        return 0;
    }

    try {
        if (!reverify_file.empty()) return run_reverify(reverify_file, flags);
        if (!batch_file.empty()) return run_batch(batch_file, flags);

        if (group_text.empty() || prime == 0) {
            std::cerr << "cwcell: need --group and --prime (or --batch / --reverify / "
                         "--list-builtins)\n";
            return 1;
        }
        TrichotomyVerdict v;
        json report = run_one(group_text, prime, flags, &v);
        if (flags.format == "json")
            std::cout << report.dump(2) << "\n";
        else
            print_text_report(report, std::cout);
        if (!flags.cert_out.empty()) {
            int rc = write_certificate(v, flags.cert_out);
            if (rc != 0) return rc;
        }
        return exit_code(v);
    } catch (const cwcell::error& e) {
        std::cerr << "cwcell: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "cwcell: " << e.what() << "\n";
        return 1;
    }
}
