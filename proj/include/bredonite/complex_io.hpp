#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bredonite/complex.hpp"

namespace bredonite {

// Complex file format:
//   {"group": "<group-spec>",
//    "cells": [{"id": "v0", "dim": 0, "stabilizer": [0, 3]}, ...],
//    "boundary": [{"from": "e1", "to": "v0", "a": 2, "deg": -1}, ...]}
// Element indices follow construct_group's enumeration. Reading normalizes
// the complex; writing emits the canonical form with keys in the order above.

// Throws ParseError on malformed JSON or schema violations. The result is
// normalized but not validated.
GCWComplex complex_from_json(const nlohmann::json& j);
GCWComplex parse_complex(std::string_view text);
GCWComplex load_complex(const std::filesystem::path& path);

// Throws ValidationError if the group has no spec string.
nlohmann::ordered_json complex_to_json(const GCWComplex& x);
// Two-space indented canonical text with a trailing newline.
std::string dump_complex(const GCWComplex& x);

}  // namespace bredonite
