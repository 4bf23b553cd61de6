#pragma once

#include <cstdint>

#include "kimura/partition.hpp"

namespace kimura {

// c^lambda_{mu,nu} by direct enumeration of Littlewood-Richardson skew
// tableaux of shape lambda/mu with content nu.  Symmetric in mu, nu.
// Requires weight(mu) + weight(nu) = weight(lambda).
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace kimura
