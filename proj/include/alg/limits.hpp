#pragma once

#include <cstddef>

namespace alg {

struct Limits {
  /// Largest ring or module whose ideal/submodule lattice may be enumerated.
  std::size_t enumeration_cap = 64;
  /// Largest structure whose axioms are audited exhaustively at construction.
  std::size_t audit_bound = 32;
};

/// Process-wide limits. Initialised from ALG_MAX_CARD (overrides the
/// enumeration cap) on first use.
const Limits& limits();

/// Replaces the process-wide limits. Call before any concurrent work starts.
void set_limits(const Limits& l);

}  // namespace alg
