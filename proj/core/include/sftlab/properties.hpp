#ifndef SFTLAB_PROPERTIES_HPP
#define SFTLAB_PROPERTIES_HPP

#include <cstdint>

#include "sftlab/symmetry.hpp"

namespace sftlab {

struct PropertyReport {
  uint64_t seed = 0;
  long cases = 0;
  long homomorphism_violations = 0;  // include(a.b) != include(a).include(b)
  long evenness_violations = 0;      // include of an even symmetry gone odd
  long identity_violations = 0;      // include(id) != id

  bool clean() const {
    return homomorphism_violations == 0 && evenness_violations == 0 &&
           identity_violations == 0;
  }
};

/// Seeded random corpus over several base matrices and levels; each case
/// draws two even symmetries and checks that inclusion into a higher power
/// is a homomorphism, maps identity to identity, and preserves evenness.
/// Level pairs are resampled when the power graph would exceed `edge_cap`.
PropertyReport run_symmetry_properties(uint64_t seed, long cases,
                                       long edge_cap = 20000);

}  // namespace sftlab

#endif
