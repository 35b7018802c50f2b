#pragma once

#include <map>
#include <string>

#include <infoconc/measures.hpp>

namespace infoconc {

// Plain-text configuration: "key=value" tokens (one per line in files,
// '#' starts a comment).  Keys are kept as raw strings; the canonical text
// form is the sorted key=value listing, so parse -> print is idempotent.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values_text(const std::string& text);
std::string canonical_text(const KeyValues& kv);

// Family construction from config keys:
//   family = pareto | homogeneous | student | gaussian
//   n      = dimension (all families)
//   beta   = exponent (pareto, student)
//   a      = scale (pareto, default 1)
//   s      = concavity parameter (homogeneous)
//   norm_q = 1 | 2 | inf (homogeneous, default 2)
//   norm_scale = positive multiplier of the norm (homogeneous, default 1)
// Unknown keys relevant to other layers are ignored here.
Family family_from_config(const KeyValues& kv);

// Exact inverse for reporting: the emitted keys reconstruct the family via
// family_from_config (doubles rendered with round-trip precision).
KeyValues family_to_config(const Family& f);

}  // namespace infoconc
