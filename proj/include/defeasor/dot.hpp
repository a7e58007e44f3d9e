#pragma once

#include <string>

#include "defeasor/framework.hpp"
#include "defeasor/semantics.hpp"

namespace defeasor {

/// Graphviz rendering of the defeat graph. Nodes are filled by argument
/// status under `kind` (green Justified, yellow Defensible, red Overruled);
/// subargument links are drawn dashed.
std::string to_dot(const Framework& f, SemanticsKind kind = SemanticsKind::Grounded);

}  // namespace defeasor
