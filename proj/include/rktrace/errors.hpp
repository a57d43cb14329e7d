#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rktrace {

// a checked mathematical claim failed; carries the claim slug and a witness
// string so callers can turn it into a machine-readable violation report
struct violation_error : std::runtime_error {
    std::string claim;
    std::string witness;

    violation_error(std::string claim_, std::string witness_)
        : std::runtime_error(claim_ + ": " + witness_),
          claim(std::move(claim_)),
          witness(std::move(witness_)) {}
};

} // namespace rktrace
