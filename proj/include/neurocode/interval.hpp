#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "neurocode/code.hpp"
#include "neurocode/rational.hpp"

namespace neurocode {

/// A convex subset of R: empty, a point, an interval, a ray, or the whole
/// line. Infinite ends are always open; a degenerate interval (lo == hi) is
/// closed at both ends.
class IntervalSet {
public:
    IntervalSet() = default;  // the empty set

    static IntervalSet empty_set() { return IntervalSet(); }
    static IntervalSet bounded(const Rational& lo, bool lo_closed, const Rational& hi,
                               bool hi_closed);
    static IntervalSet point(const Rational& v) { return bounded(v, true, v, true); }

    /// General form; nullopt endpoints mean -inf / +inf and must be open.
    static IntervalSet make(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi,
                            bool hi_closed);

    bool is_empty() const { return empty_; }
    /// True when both ends are finite; the empty set counts as bounded.
    bool is_bounded() const { return empty_ || (lo_.has_value() && hi_.has_value()); }
    const std::optional<Rational>& lo() const { return lo_; }
    const std::optional<Rational>& hi() const { return hi_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }

    bool contains(const Rational& x) const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b);

private:
    bool empty_ = true;
    std::optional<Rational> lo_;
    std::optional<Rational> hi_;
    bool lo_closed_ = false;
    bool hi_closed_ = false;
};

enum class LineStimulus { whole_line, union_only };

/// A dimension-1 realization: one convex set per neuron. Under whole_line
/// the stimulus space is all of R (uncovered points realize the empty
/// codeword); under union_only it is the union of the sets.
struct Realization1D {
    int n = 0;
    LineStimulus stimulus = LineStimulus::whole_line;
    std::vector<IntervalSet> intervals;
};

/// The partition of R induced by points v_1 < ... < v_t into 2t+1 cells,
/// indexed 0..2t in line order: (-inf,v_1), {v_1}, (v_1,v_2), ..., {v_t},
/// (v_t,+inf); t = 0 leaves the single cell R. Interval membership is
/// constant on each cell, so one rational representative per cell decides
/// everything: the point itself, midpoints for bounded open cells, and
/// v_1 - 1 / v_t + 1 for the rays.
class CellDecomposition {
public:
    explicit CellDecomposition(std::vector<Rational> points);

    /// Decomposition on all finite endpoints of the nonempty intervals.
    static CellDecomposition from_endpoints(const Realization1D& r);

    int point_count() const { return static_cast<int>(points_.size()); }
    int cell_count() const { return 2 * point_count() + 1; }
    bool is_point_cell(int cell) const;
    Rational representative(int cell) const;
    const std::vector<Rational>& points() const { return points_; }

private:
    std::vector<Rational> points_;
};

/// Exact realized-code extraction: sweeps the cell decomposition of the
/// endpoints, collects each cell's membership support, and returns the
/// distinct nonempty supports, plus the empty codeword iff the stimulus is
/// whole_line and some cell is uncovered. Output is canonical.
NeuralCode realized_code_1d(const Realization1D& r);

struct OpenifyResult {
    Rational epsilon;
    bool epsilon_fallback = false;  // every endpoint coincided; epsilon = 1 used
    Realization1D opened;
};

/// The epsilon/3 opening procedure: epsilon is the smallest nonzero distance
/// between any two finite endpoints, and each nonempty interval [a,b]-like
/// set becomes the open interval (a', b') with a' = a -/+ epsilon/3 as a is
/// closed/open, and b' = b +/- epsilon/3 as b is closed/open. Points widen
/// to open intervals; empty sets stay empty. Requires bounded intervals.
OpenifyResult openify(const Realization1D& r);

struct OpenifyReport {
    Rational epsilon;
    bool epsilon_fallback = false;
    NeuralCode before;
    NeuralCode after;
    bool equal = false;
    Realization1D realization_after;
};

/// Runs openify and compares the realized codes before and after. Inequality
/// is recorded, never treated as an error.
OpenifyReport conjecture1_check(const Realization1D& r);

struct RandomRealization1DOptions {
    /// Endpoints are drawn from the grid {0, 1/2, 1, ..., (grid_values-1)/2};
    /// the small grid forces shared endpoints and point intervals often.
    int grid_values = 9;
    Rational empty_prob = Rational(1, 8);
    Rational unbounded_prob = Rational(0);  // per end; rejected by openify when hit
    LineStimulus stimulus = LineStimulus::whole_line;
};

/// Deterministic fuzz generator for 1-D realizations.
Realization1D random_realization_1d(int n, std::uint64_t seed,
                                    const RandomRealization1DOptions& options = {});

/// Shifts every finite endpoint by c; used by the harness's invariance checks.
Realization1D translate(const Realization1D& r, const Rational& c);

}  // namespace neurocode
