#include "neurocode/interval.hpp"

#include <algorithm>

#include "rng_util.hpp"

namespace neurocode {

IntervalSet IntervalSet::make(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi,
                              bool hi_closed) {
    if (!lo && lo_closed) raise(Errc::bad_parameter, "an infinite lower end must be open");
    if (!hi && hi_closed) raise(Errc::bad_parameter, "an infinite upper end must be open");
    if (lo && hi) {
        if (*lo > *hi)
            raise(Errc::bad_parameter, "interval ends out of order: " + rational_to_string(*lo) +
                                           " > " + rational_to_string(*hi));
        if (*lo == *hi && !(lo_closed && hi_closed))
            raise(Errc::bad_parameter, "a single point must be closed at both ends");
    }
    IntervalSet s;
    s.empty_ = false;
    s.lo_ = std::move(lo);
    s.hi_ = std::move(hi);
    s.lo_closed_ = lo_closed;
    s.hi_closed_ = hi_closed;
    return s;
}

IntervalSet IntervalSet::bounded(const Rational& lo, bool lo_closed, const Rational& hi,
                                 bool hi_closed) {
    return make(lo, lo_closed, hi, hi_closed);
}

bool IntervalSet::contains(const Rational& x) const {
    if (empty_) return false;
    if (lo_ && (x < *lo_ || (x == *lo_ && !lo_closed_))) return false;
    if (hi_ && (x > *hi_ || (x == *hi_ && !hi_closed_))) return false;
    return true;
}

bool operator==(const IntervalSet& a, const IntervalSet& b) {
    if (a.empty_ != b.empty_) return false;
    if (a.empty_) return true;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_closed_ == b.lo_closed_ &&
           a.hi_closed_ == b.hi_closed_;
}

CellDecomposition::CellDecomposition(std::vector<Rational> points) : points_(std::move(points)) {
    for (size_t i = 1; i < points_.size(); ++i)
        if (!(points_[i - 1] < points_[i]))
            raise(Errc::bad_parameter, "cell points must be strictly increasing");
}

CellDecomposition CellDecomposition::from_endpoints(const Realization1D& r) {
    std::vector<Rational> values;
    for (const IntervalSet& s : r.intervals) {
        if (s.is_empty()) continue;
        if (s.lo()) values.push_back(*s.lo());
        if (s.hi()) values.push_back(*s.hi());
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return CellDecomposition(std::move(values));
}

bool CellDecomposition::is_point_cell(int cell) const {
    if (cell < 0 || cell >= cell_count())
        raise(Errc::index_out_of_range, "cell " + std::to_string(cell) + " out of range");
    return cell % 2 == 1;
}

Rational CellDecomposition::representative(int cell) const {
    if (cell < 0 || cell >= cell_count())
        raise(Errc::index_out_of_range, "cell " + std::to_string(cell) + " out of range");
    const int t = point_count();
    if (t == 0) return 0;
    if (cell % 2 == 1) return points_[static_cast<size_t>((cell - 1) / 2)];
    if (cell == 0) return points_.front() - 1;
    if (cell == 2 * t) return points_.back() + 1;
    return (points_[static_cast<size_t>(cell / 2 - 1)] + points_[static_cast<size_t>(cell / 2)]) / 2;
}

namespace {

void check_shape(const Realization1D& r) {
    if (r.n < 1) raise(Errc::bad_parameter, "a realization needs at least one neuron");
    if (static_cast<int>(r.intervals.size()) != r.n)
        raise(Errc::bad_parameter, "expected " + std::to_string(r.n) + " intervals, got " +
                                       std::to_string(r.intervals.size()));
}

}  // namespace

NeuralCode realized_code_1d(const Realization1D& r) {
    check_shape(r);
    const CellDecomposition cells = CellDecomposition::from_endpoints(r);

    std::vector<std::uint64_t> supports;
    bool uncovered_cell = false;
    for (int c = 0; c < cells.cell_count(); ++c) {
        const Rational x = cells.representative(c);
        std::uint64_t mask = 0;
        for (int j = 1; j <= r.n; ++j)
            if (r.intervals[static_cast<size_t>(j - 1)].contains(x))
                mask |= std::uint64_t{1} << (j - 1);
        if (mask == 0)
            uncovered_cell = true;
        else
            supports.push_back(mask);
    }

    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

    std::vector<Codeword> words;
    if (r.stimulus == LineStimulus::whole_line && uncovered_cell) words.emplace_back();
    for (std::uint64_t m : supports) words.emplace_back(m);
    std::sort(words.begin(), words.end(), canonical_less);
    return NeuralCode(r.n, std::move(words));
}

OpenifyResult openify(const Realization1D& r) {
    check_shape(r);

    std::vector<Rational> values;
    for (const IntervalSet& s : r.intervals) {
        if (s.is_empty()) continue;
        if (!s.is_bounded())
            raise(Errc::unbounded_interval, "the opening procedure needs finite endpoints");
        values.push_back(*s.lo());
        values.push_back(*s.hi());
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    OpenifyResult result;
    if (values.size() < 2) {
        // No nonzero endpoint distance exists; fall back to 1 so the
        // procedure stays total.
        result.epsilon = 1;
        result.epsilon_fallback = true;
    } else {
        result.epsilon = values[1] - values[0];
        for (size_t i = 2; i < values.size(); ++i) {
            const Rational gap = values[i] - values[i - 1];
            if (gap < result.epsilon) result.epsilon = gap;
        }
    }

    const Rational shift = result.epsilon / 3;
    result.opened.n = r.n;
    result.opened.stimulus = r.stimulus;
    for (const IntervalSet& s : r.intervals) {
        if (s.is_empty()) {
            result.opened.intervals.push_back(IntervalSet::empty_set());
            continue;
        }
        Rational lo = *s.lo();
        Rational hi = *s.hi();
        if (s.lo_closed())
            lo -= shift;
        else
            lo += shift;
        if (s.hi_closed())
            hi += shift;
        else
            hi -= shift;
        result.opened.intervals.push_back(IntervalSet::bounded(lo, false, hi, false));
    }
    return result;
}

OpenifyReport conjecture1_check(const Realization1D& r) {
    OpenifyReport report;
    report.before = realized_code_1d(r);
    OpenifyResult opened = openify(r);
    report.epsilon = opened.epsilon;
    report.epsilon_fallback = opened.epsilon_fallback;
    report.after = realized_code_1d(opened.opened);
    report.equal = report.before == report.after;
    report.realization_after = std::move(opened.opened);
    return report;
}

Realization1D random_realization_1d(int n, std::uint64_t seed,
                                    const RandomRealization1DOptions& options) {
    if (n < 1) raise(Errc::bad_parameter, "need at least one neuron");
    if (n > Codeword::max_neurons) raise(Errc::bad_parameter, "too many neurons");
    if (options.grid_values < 1) raise(Errc::bad_parameter, "grid needs at least one value");
    for (const Rational* p : {&options.empty_prob, &options.unbounded_prob}) {
        if (*p < 0 || *p > 1) raise(Errc::bad_parameter, "probability must lie in [0,1]");
        if (!p->get_den().fits_ulong_p())
            raise(Errc::bad_parameter, "probability denominator too large");
    }

    std::mt19937_64 rng(seed);
    auto grid_value = [&rng, &options] {
        return Rational(static_cast<long>(detail::draw_below(
                            rng, static_cast<std::uint64_t>(options.grid_values))),
                        2);
    };

    Realization1D r;
    r.n = n;
    r.stimulus = options.stimulus;
    for (int j = 0; j < n; ++j) {
        if (detail::draw_bernoulli(rng, options.empty_prob)) {
            r.intervals.push_back(IntervalSet::empty_set());
            continue;
        }
        const bool lo_infinite = detail::draw_bernoulli(rng, options.unbounded_prob);
        const bool hi_infinite = detail::draw_bernoulli(rng, options.unbounded_prob);
        Rational a = grid_value();
        Rational b = grid_value();
        if (b < a) std::swap(a, b);
        std::optional<Rational> lo, hi;
        bool lo_closed = false, hi_closed = false;
        if (!lo_infinite) {
            lo = a;
            lo_closed = detail::draw_below(rng, 2) == 0;
        }
        if (!hi_infinite) {
            hi = b;
            hi_closed = detail::draw_below(rng, 2) == 0;
        }
        if (lo && hi && a == b) lo_closed = hi_closed = true;
        r.intervals.push_back(IntervalSet::make(std::move(lo), lo_closed, std::move(hi), hi_closed));
    }
    return r;
}

Realization1D translate(const Realization1D& r, const Rational& c) {
    Realization1D out;
    out.n = r.n;
    out.stimulus = r.stimulus;
    for (const IntervalSet& s : r.intervals) {
        if (s.is_empty()) {
            out.intervals.push_back(IntervalSet::empty_set());
            continue;
        }
        std::optional<Rational> lo = s.lo(), hi = s.hi();
        if (lo) *lo += c;
        if (hi) *hi += c;
        out.intervals.push_back(IntervalSet::make(std::move(lo), s.lo_closed(), std::move(hi),
                                                  s.hi_closed()));
    }
    return out;
}

}  // namespace neurocode
