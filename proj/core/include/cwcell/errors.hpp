#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cwcell {

// Base class for everything thrown by this library.  Precondition
// violations and resource-limit hits are exceptions; wrong answers are
// never returned silently.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands act on different point sets.
struct DegreeMismatch : error {
    DegreeMismatch(std::uint32_t a, std::uint32_t b)
        : error("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// An exact enumeration would exceed the configured element limit.
struct OrderExceedsLimit : error {
    OrderExceedsLimit(std::uint64_t order, std::uint64_t limit)
        : error("group order " + std::to_string(order) + " exceeds enumeration limit " +
                std::to_string(limit)) {}
};

// A coset space is larger than the configured limit.
struct IndexExceedsLimit : error {
    IndexExceedsLimit(std::uint64_t index, std::uint64_t limit)
        : error("subgroup index " + std::to_string(index) + " exceeds limit " +
                std::to_string(limit)) {}
};

// An element was required to lie in a group and does not.
struct NonMember : error {
    explicit NonMember(const std::string& what) : error("not a member: " + what) {}
};

// A subgroup passed to a quotient construction is not normal.
struct NotNormal : error {
    explicit NotNormal(const std::string& what) : error("subgroup not normal: " + what) {}
};

// A subgroup claimed to be a Sylow p-subgroup fails the order test.
struct NotSylow : error {
    explicit NotSylow(const std::string& what) : error("not a Sylow subgroup: " + what) {}
};

// Invalid parameters for a group family or representation constructor.
struct BadParams : error {
    explicit BadParams(const std::string& what) : error("bad parameters: " + what) {}
};

// A prime was required.
struct NotPrime : error {
    explicit NotPrime(std::uint64_t n) : error(std::to_string(n) + " is not prime") {}
};

// A finite field or table size is beyond the supported range.
struct SizeExceeded : error {
    explicit SizeExceeded(const std::string& what) : error("size exceeded: " + what) {}
};

// A map claimed to be a linear character is not multiplicative.
struct NotCharacter : error {
    explicit NotCharacter(const std::string& what) : error("not a character: " + what) {}
};

// Representation evaluation was requested for an element outside its
// source group.
struct SourceMismatch : error {
    explicit SourceMismatch(const std::string& what) : error("source mismatch: " + what) {}
};

// A matrix action does not map the chosen point set into itself.
struct ActionNotClosed : error {
    explicit ActionNotClosed(const std::string& what) : error("action not closed: " + what) {}
};

// A matrix action required to be faithful has nontrivial kernel.
struct ActionNotFaithful : error {
    explicit ActionNotFaithful(const std::string& what)
        : error("action not faithful: " + what) {}
};

// A semidirect-product action table is not by automorphisms.
struct ActionNotAutomorphism : error {
    explicit ActionNotAutomorphism(const std::string& what)
        : error("action not by automorphisms: " + what) {}
};

// A quotient witness cannot be justified: Sylow fusion is not
// controlled by the normalizer, so character invariance on the quotient
// does not follow.
struct FusionNotControlled : error {
    explicit FusionNotControlled(const std::string& what)
        : error("fusion not controlled by normalizer: " + what) {}
};

// A certificate check failed during construction.  Witness builders
// throw this rather than returning a certificate with a false flag.
struct CheckFailed : error {
    explicit CheckFailed(const std::string& which) : error("check failed: " + which) {}
};

// Recorded certificate data no longer matches the group it references.
struct StaleCertificate : error {
    explicit StaleCertificate(const std::string& what) : error("stale certificate: " + what) {}
};

// Malformed group-spec text.  `reason` keeps the bare message so
// nested parsers can rebase `position` into the enclosing text.
struct ParseError : error {
    ParseError(const std::string& what, std::size_t pos)
        : error("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos),
          reason(what) {}
    std::size_t position;
    std::string reason;
};

}  // namespace cwcell
