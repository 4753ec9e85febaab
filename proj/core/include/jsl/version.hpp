// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace jsl {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace jsl
