#pragma once

namespace shg {

inline constexpr const char* kSchemaId = "shg-perturb/1";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace shg
