#pragma once

#include <optional>
#include <vector>

#include "neurocode/code.hpp"
#include "neurocode/interval.hpp"

namespace neurocode {

/// Contiguous, inclusive range of cell indices (0-based, over a
/// CellDecomposition with 2t+1 cells). Any such run is a convex subset of R.
struct CellRun {
    int lo = 0;
    int hi = 0;
};

/// A combinatorial 1-D realization candidate: t arrangement points and, per
/// neuron, either no cells at all or one contiguous run of cells.
struct CellAssignment {
    int t = 0;
    LineStimulus stimulus = LineStimulus::whole_line;
    std::vector<std::optional<CellRun>> runs;  // one entry per neuron
};

struct SearchOptions {
    /// Cap on arrangement points; defaults to 2n, which is complete: any
    /// realization by n intervals has at most 2n distinct finite endpoints.
    std::optional<int> max_points;
    /// Disables symmetry and prefix pruning; kept for cross-checking the
    /// pruned search on small inputs.
    bool prune = true;
};

/// Complete search for a convex realization of the code in R^1. Tries
/// t = 0, 1, ..., max_points arrangement points and, for each t, assigns
/// neurons in order to runs of the 2t+1 cells. The stimulus mode is forced
/// by the code (whole_line iff the empty codeword is present). Every hit is
/// re-verified through realized_code_1d before being returned; nullopt with
/// the default cap means no realization in R^1 exists.
std::optional<CellAssignment> search_dim1(const NeuralCode& code, const SearchOptions& options = {});

/// Concretizes an assignment with arrangement points 1, 2, ..., t: each run
/// becomes the interval spanning its cells, closed at a finite end iff the
/// boundary point-cell is included, infinite where a ray cell is included.
Realization1D assignment_to_realization(const CellAssignment& a);

}  // namespace neurocode
