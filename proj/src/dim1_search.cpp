#include "neurocode/dim1_search.hpp"

#include <algorithm>
#include <unordered_set>

namespace neurocode {

Realization1D assignment_to_realization(const CellAssignment& a) {
    if (a.t < 0) raise(Errc::bad_parameter, "negative arrangement point count");
    if (a.runs.empty()) raise(Errc::bad_parameter, "assignment has no neurons");
    const int last = 2 * a.t;

    Realization1D r;
    r.n = static_cast<int>(a.runs.size());
    r.stimulus = a.stimulus;
    for (const std::optional<CellRun>& run : a.runs) {
        if (!run) {
            r.intervals.push_back(IntervalSet::empty_set());
            continue;
        }
        if (run->lo < 0 || run->hi > last || run->lo > run->hi)
            raise(Errc::index_out_of_range, "cell run out of range");
        std::optional<Rational> lo, hi;
        bool lo_closed = false, hi_closed = false;
        if (run->lo % 2 == 1) {
            lo = Rational((run->lo + 1) / 2);  // starts at a point cell: closed end
            lo_closed = true;
        } else if (run->lo > 0) {
            lo = Rational(run->lo / 2);  // starts inside an open cell: open end
        }
        if (run->hi % 2 == 1) {
            hi = Rational((run->hi + 1) / 2);
            hi_closed = true;
        } else if (run->hi < last) {
            hi = Rational(run->hi / 2 + 1);
        }
        r.intervals.push_back(IntervalSet::make(std::move(lo), lo_closed, std::move(hi), hi_closed));
    }
    return r;
}

namespace {

struct Searcher {
    int n = 0;
    std::vector<std::uint64_t> targets;  // nonempty codeword masks, ascending
    bool want_empty = false;
    NeuralCode target_code;
    LineStimulus stimulus = LineStimulus::whole_line;
    bool prune = true;
    std::vector<std::unordered_set<std::uint64_t>> prefix_sets;  // by neuron count

    int t = 0;
    int cells = 1;
    std::vector<std::uint64_t> cellmask;
    std::vector<std::optional<CellRun>> runs;
    bool any_run_placed = false;
    std::optional<CellAssignment> result;

    bool prefix_ok(int j) const {
        const std::uint64_t pref = (std::uint64_t{1} << j) - 1;
        bool zero_seen = false;
        for (int c = 0; c < cells; ++c) {
            if (cellmask[static_cast<size_t>(c)] == 0) {
                zero_seen = true;
            } else if (!prefix_sets[static_cast<size_t>(j)].count(cellmask[static_cast<size_t>(c)])) {
                return false;  // no completion of this cell reaches a codeword
            }
        }
        if (want_empty && !zero_seen) return false;
        for (std::uint64_t target : targets) {
            const std::uint64_t need = target & pref;
            if (need == 0) {
                if (!zero_seen) return false;
                continue;
            }
            bool present = false;
            for (int c = 0; c < cells && !present; ++c)
                present = cellmask[static_cast<size_t>(c)] == need;
            if (!present) return false;  // some codeword's prefix is already unreachable
        }
        return true;
    }

    bool leaf() {
        std::vector<std::uint64_t> seen;
        bool zero_seen = false;
        for (int c = 0; c < cells; ++c) {
            if (cellmask[static_cast<size_t>(c)] == 0)
                zero_seen = true;
            else
                seen.push_back(cellmask[static_cast<size_t>(c)]);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        if (seen != targets) return false;
        if (want_empty && !zero_seen) return false;

        // Never trust the bookkeeping: confirm through the interval sweep.
        CellAssignment candidate{t, stimulus, runs};
        if (!(realized_code_1d(assignment_to_realization(candidate)) == target_code)) return false;
        result = std::move(candidate);
        return true;
    }

    bool assign(int j) {
        if (j > n) return leaf();
        const size_t slot = static_cast<size_t>(j - 1);

        runs[slot] = std::nullopt;
        if ((!prune || prefix_ok(j)) && assign(j + 1)) return true;

        const std::uint64_t bit = std::uint64_t{1} << (j - 1);
        const bool placed_before = any_run_placed;
        for (int l = 0; l < cells; ++l) {
            for (int h = l; h < cells; ++h) {
                if (prune && !placed_before) {
                    // Reflection x -> -x maps run [l,h] to [cells-1-h, cells-1-l]
                    // and preserves the realized code, so keep only the
                    // lexicographically smaller of each mirror pair for the
                    // first placed run.
                    const int ml = cells - 1 - h;
                    const int mh = cells - 1 - l;
                    if (l > ml || (l == ml && h > mh)) continue;
                }
                for (int c = l; c <= h; ++c) cellmask[static_cast<size_t>(c)] |= bit;
                runs[slot] = CellRun{l, h};
                any_run_placed = true;
                const bool found = (!prune || prefix_ok(j)) && assign(j + 1);
                any_run_placed = placed_before;
                for (int c = l; c <= h; ++c) cellmask[static_cast<size_t>(c)] &= ~bit;
                if (found) return true;
                runs[slot] = std::nullopt;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<CellAssignment> search_dim1(const NeuralCode& code, const SearchOptions& options) {
    if (code.codewords().empty()) raise(Errc::empty_code, "code has no codewords");
    const NeuralCode canon = canonicalize(code);
    if (canon.nonempty_count() == 0)
        raise(Errc::empty_code, "need at least one nonempty codeword to search for");
    if (options.max_points && *options.max_points < 0)
        raise(Errc::bad_parameter, "max_points must be >= 0");

    Searcher s;
    s.n = canon.neuron_count();
    s.want_empty = canon.has_empty_codeword();
    s.stimulus = s.want_empty ? LineStimulus::whole_line : LineStimulus::union_only;
    s.target_code = canon;
    s.prune = options.prune;
    for (const Codeword& w : canon.nonempty_codewords()) s.targets.push_back(w.mask());
    std::sort(s.targets.begin(), s.targets.end());

    s.prefix_sets.resize(static_cast<size_t>(s.n) + 1);
    for (int j = 1; j <= s.n; ++j) {
        const std::uint64_t pref = (std::uint64_t{1} << j) - 1;
        for (std::uint64_t target : s.targets)
            s.prefix_sets[static_cast<size_t>(j)].insert(target & pref);
    }

    const int max_points = options.max_points.value_or(2 * s.n);
    const int needed_cells = static_cast<int>(s.targets.size()) + (s.want_empty ? 1 : 0);
    for (int t = 0; t <= max_points; ++t) {
        s.t = t;
        s.cells = 2 * t + 1;
        if (s.prune && s.cells < needed_cells) continue;  // each codeword needs its own cell
        s.cellmask.assign(static_cast<size_t>(s.cells), 0);
        s.runs.assign(static_cast<size_t>(s.n), std::nullopt);
        s.any_run_placed = false;
        if (s.assign(1)) return s.result;
    }
    return std::nullopt;
}

}  // namespace neurocode
