#pragma once

#include <optional>
#include <string>

#include "latip/model.hpp"

namespace latip {

// Instance documents: JSON with fields kind ("bip" | "bkp"), A/a, b, u and an
// optional objective c. Integers are decimal strings to keep arbitrary
// precision; plain JSON integers are accepted on input.

struct ParsedInstance {
    enum class Kind { Bip, Bkp };
    Kind kind = Kind::Bkp;
    std::optional<BipInstance> bip;
    std::optional<BkpInstance> bkp;
    std::optional<IntVec> objective;
};

/// Throws std::invalid_argument with a human-readable reason on malformed
/// documents or instances failing validate_instance.
ParsedInstance parse_instance_text(const std::string& text);
ParsedInstance load_instance_file(const std::string& path);

std::string instance_to_json(const BkpInstance& inst, const IntVec* objective = nullptr);
std::string instance_to_json(const BipInstance& inst, const IntVec* objective = nullptr);

/// Parses an objective either inline ("1,-2,0") or from an instance file's
/// "c" field.
IntVec parse_objective_arg(const std::string& arg, std::size_t expected_len);

}  // namespace latip
