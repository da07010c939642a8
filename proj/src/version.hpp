#pragma once

namespace wh {

inline constexpr const char* kVersion = "0.2.0";

/* Bumped whenever the e_k construction or the monomial order changes,
** so that stale disk-cached idempotent matrices are never reused. */
inline constexpr const char* kCodeVersion = "0.2.0+ek1";

}  // namespace wh
