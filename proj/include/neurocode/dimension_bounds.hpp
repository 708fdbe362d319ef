#pragma once

#include <optional>

#include "neurocode/code.hpp"

namespace neurocode {

enum class UpperSource { theorem1, dim1_search, degenerate };

/// Interval bound on the minimal convex embedding dimension of a code.
/// lower comes from Helly's theorem and is only a necessary condition;
/// upper comes from an explicit realization (the simplex-atom construction,
/// a found 1-D realization, or the degenerate single-codeword case).
struct DimensionBounds {
    int lower = 0;
    int upper = 0;
    std::optional<Codeword> lower_witness;  // Helly-violating set at dimension lower-1
    UpperSource upper_source = UpperSource::theorem1;

    bool tight() const { return lower == upper; }
};

/// A Helly obstruction to realizability in R^d: some sigma with
/// |sigma| >= d+2 that is not a face of the code's complex although every
/// (d+1)-subset of it is. If the n neurons' sets realized sigma's
/// (d+1)-subsets in R^d, Helly's theorem would force a common point, whose
/// support would be a face containing sigma. Searches minimal non-faces
/// only: a violation exists at d iff some minimal non-face has size >= d+2,
/// and the certificate returned is the first such non-face in canonical
/// order. nullopt means Helly says nothing at this dimension.
std::optional<Codeword> helly_violation(const NeuralCode& code, int d);

/// Independent route to the same certificate: scans all 2^n subsets and
/// tests the violation conditions directly against face queries. Capped at
/// n <= 12. Kept deliberately separate from helly_violation so the two can
/// be compared in anger.
std::optional<Codeword> helly_violation_brute(const NeuralCode& code, int d);

/// The least d >= 0 with no Helly violation; equals
/// max(0, (largest minimal non-face size) - 1).
int helly_lower_bound(const NeuralCode& code);

/// lower = helly_lower_bound; upper = the construction's ambient dimension.
/// With refine_with_search, codes whose lower bound allows dimension <= 1
/// are settled by the exhaustive 1-D search: found tightens upper to 1,
/// exhausted raises lower to 2.
DimensionBounds embedding_dimension_bounds(const NeuralCode& code, bool refine_with_search = false);

}  // namespace neurocode
