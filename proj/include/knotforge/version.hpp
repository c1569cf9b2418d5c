// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

namespace knotforge {

/// Part of every cache key; bump whenever output formats or results change.
inline constexpr const char* kVersion = "0.1.0";

}  // namespace knotforge
