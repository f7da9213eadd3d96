#pragma once

#include <json.hpp>

namespace rrg {

// Insertion-ordered so emitted artifacts keep a stable, readable key order.
using Json = nlohmann::ordered_json;

} // namespace rrg
