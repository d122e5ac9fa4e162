#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "cwcell/classify.hpp"
#include "cwcell/witness.hpp"

namespace cwcell::tool {

// Plain nlohmann::json keeps keys sorted, so dump() is canonical and
// byte-stable for identical content.
using nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

json perm_to_json(const Perm& x);  // image array, 0-based
Perm perm_from_json(const json& j, Point degree);

// Schema cwcell-certificate/1.  Self-contained: degree, generator
// lists for the group, Sylow subgroup and normalizer, the
// representation's generator images, the check flags, and a digest
// over everything else.
json certificate_to_json(const WitnessCertificate& c);
// Rebuilds the groups and the representation (table mode, so the
// normalizer order must stay within the table limit).  Digest or
// membership mismatches raise StaleCertificate.
WitnessCertificate certificate_from_json(const json& j, const Limits& lim = {});
std::string certificate_digest(const WitnessCertificate& c);

// Schema cwcell-verdict/1.  Carries the branch plus the evidence
// needed by reverify: reduced-group generators, Sylow generators,
// fusion conjugators, or the embedded witness certificate.
json verdict_to_json(const TrichotomyVerdict& v);
TrichotomyVerdict verdict_from_json(const json& j, const PermGroup& g, const Limits& lim = {});

}  // namespace cwcell::tool
