#pragma once

#include <cstdint>

#include "kimura/partition.hpp"

namespace kimura {

// chi_lambda evaluated on the class of cycle type mu, by the
// Murnaghan-Nakayama rule.  Memoized on (lambda, mu); the cache is a
// transparent read-through table guarded by a mutex.
std::int64_t character(const Partition& lambda, const Partition& mu);

// Order of the centralizer of the class mu: z_mu = prod k^{m_k} m_k!.
std::int64_t centralizer_order(const Partition& mu);

// Size of the conjugacy class of cycle type mu: n!/z_mu.
std::int64_t class_size(const Partition& mu);

}  // namespace kimura
