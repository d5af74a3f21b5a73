#pragma once

#include "sessionpi/checker.hpp"

namespace sessionpi {

/// m is a q-qualified prefix of the given polarity; unrestricted prefixes must
/// also equal their own continuation.
bool prefix_guard(const Slot& m, Qualifier q, Polarity pol);

}  // namespace sessionpi
