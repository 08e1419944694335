#pragma once

#include <stdexcept>
#include <string>

namespace translat {

// Raised for inputs outside a documented contract (bad spec strings,
// order caps, malformed relations, non-lattice posets, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace translat
