#include "neurocode/simplex_realization.hpp"

#include <algorithm>

#include "rng_util.hpp"

namespace neurocode {

ConstructedRealization construct(const NeuralCode& code, OrderPolicy policy) {
    if (code.codewords().empty())
        raise(Errc::empty_code, "cannot realize a code with no codewords");

    std::vector<Codeword> order;
    for (const Codeword& w : code.nonempty_codewords())
        if (std::find(order.begin(), order.end(), w) == order.end()) order.push_back(w);
    if (policy == OrderPolicy::canonical) std::sort(order.begin(), order.end(), canonical_less);

    ConstructedRealization r;
    r.n = code.neuron_count();
    r.k = static_cast<int>(order.size());
    r.order = std::move(order);
    r.stimulus = code.has_empty_codeword() ? Stimulus::whole_space : Stimulus::union_only;
    if (r.k == 0) {
        r.ambient_dim = 0;
    } else if (r.k == 1 && r.stimulus == Stimulus::whole_space) {
        // R^0 is a single point, so it cannot hold one covered codeword and
        // still leave an uncovered point for the empty codeword.
        r.ambient_dim = 1;
    } else {
        r.ambient_dim = r.k - 1;
    }

    r.atoms_per_neuron.assign(static_cast<size_t>(r.n), {});
    for (int i = 1; i <= r.k; ++i)
        for (int j : r.order[static_cast<size_t>(i - 1)].indices())
            r.atoms_per_neuron[static_cast<size_t>(j - 1)].push_back(i);
    return r;
}

bool atom_membership(const SimplexAtom& atom, const RationalPoint& p) {
    if (static_cast<int>(p.size()) != atom.ambient_dim)
        raise(Errc::dimension_mismatch, "point has " + std::to_string(p.size()) +
                                            " coordinates, atom lives in dimension " +
                                            std::to_string(atom.ambient_dim));
    if (atom.index < 1 || atom.index - 1 > atom.ambient_dim)
        raise(Errc::index_out_of_range,
              "atom " + std::to_string(atom.index) + " does not fit in dimension " +
                  std::to_string(atom.ambient_dim));

    const int i = atom.index;
    if (i == 1) {
        for (const Rational& x : p)
            if (x != 0) return false;
        return true;
    }
    Rational sum = 0;
    for (int c = 1; c <= atom.ambient_dim; ++c) {
        const Rational& x = p[static_cast<size_t>(c - 1)];
        if (x < 0) return false;
        if (c >= i && x != 0) return false;
        sum += x;
    }
    return sum <= 1 && p[static_cast<size_t>(i - 2)] > 0;
}

RationalPoint witness_point(const ConstructedRealization& r, int i) {
    if (i < 1 || i > r.k)
        raise(Errc::index_out_of_range, "atom index " + std::to_string(i) + " out of 1.." +
                                            std::to_string(r.k));
    RationalPoint p(static_cast<size_t>(r.ambient_dim), Rational(0));
    for (int c = 1; c < i; ++c) p[static_cast<size_t>(c - 1)] = Rational(1, i);
    return p;
}

std::optional<Codeword> codeword_at(const ConstructedRealization& r, const RationalPoint& p) {
    if (static_cast<int>(p.size()) != r.ambient_dim)
        raise(Errc::dimension_mismatch, "point has " + std::to_string(p.size()) +
                                            " coordinates, realization lives in dimension " +
                                            std::to_string(r.ambient_dim));

    std::vector<bool> in_atom(static_cast<size_t>(r.k) + 1, false);
    for (int i = 1; i <= r.k; ++i)
        in_atom[static_cast<size_t>(i)] = atom_membership({i, r.ambient_dim}, p);

    Codeword support;
    for (int j = 1; j <= r.n; ++j)
        for (int i : r.atoms_per_neuron[static_cast<size_t>(j - 1)])
            if (in_atom[static_cast<size_t>(i)]) {
                support = support.with(j);
                break;
            }

    if (support.empty() && r.stimulus == Stimulus::union_only) return std::nullopt;
    return support;
}

NeuralCode realized_code(const ConstructedRealization& r) {
    std::vector<Codeword> words = r.order;
    if (r.stimulus == Stimulus::whole_space) words.emplace_back();
    std::sort(words.begin(), words.end(), canonical_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return NeuralCode(r.n, std::move(words));
}

NeuralCode realized_code_pointwise(const ConstructedRealization& r) {
    std::vector<Codeword> words;
    auto record = [&words](const std::optional<Codeword>& w) {
        if (w) words.push_back(*w);
    };
    for (int i = 1; i <= r.k; ++i) record(codeword_at(r, witness_point(r, i)));
    if (r.stimulus == Stimulus::whole_space) {
        RationalPoint outside(static_cast<size_t>(r.ambient_dim), Rational(0));
        if (r.ambient_dim > 0) outside[0] = 2;  // coordinate sum 2 clears every atom
        record(codeword_at(r, outside));
    }
    std::sort(words.begin(), words.end(), canonical_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return NeuralCode(r.n, std::move(words));
}

namespace {

// Random point of conv{0,e_1,...,e_span} embedded in R^dim: a convex
// combination with small random integer weights, zero beyond coordinate span.
RationalPoint random_simplex_point(std::mt19937_64& rng, int span, int dim) {
    Rational total = 0;
    std::vector<Rational> weights(static_cast<size_t>(span) + 1);
    for (Rational& w : weights) {
        w = Rational(static_cast<long>(detail::draw_below(rng, 9)));
        total += w;
    }
    if (total == 0) {
        weights[0] = 1;
        total = 1;
    }
    RationalPoint p(static_cast<size_t>(dim), Rational(0));
    for (int c = 1; c <= span; ++c) p[static_cast<size_t>(c - 1)] = weights[static_cast<size_t>(c)] / total;
    return p;
}

// Random point of atom i: as above over the vertices {0,e_1,...,e_{i-1}},
// with the e_{i-1} weight forced positive.
RationalPoint random_atom_point(std::mt19937_64& rng, int i, int dim) {
    RationalPoint p(static_cast<size_t>(dim), Rational(0));
    if (i == 1) return p;
    Rational total = 0;
    std::vector<Rational> weights(static_cast<size_t>(i));
    for (size_t c = 0; c < weights.size(); ++c) {
        long lo = c + 1 == weights.size() ? 1 : 0;
        weights[c] = Rational(lo + static_cast<long>(detail::draw_below(rng, 8)));
        total += weights[c];
    }
    for (int c = 1; c < i; ++c) p[static_cast<size_t>(c - 1)] = weights[static_cast<size_t>(c)] / total;
    return p;
}

int atoms_containing(const ConstructedRealization& r, const RationalPoint& p) {
    int hits = 0;
    for (int i = 1; i <= r.k; ++i)
        if (atom_membership({i, r.ambient_dim}, p)) ++hits;
    return hits;
}

// Membership in conv{0,e_1,...,e_span}, the telescoped union of the atoms
// S_1,...,S_{span+1}.
bool in_closed_simplex(const RationalPoint& p, int span) {
    Rational sum = 0;
    for (size_t c = 0; c < p.size(); ++c) {
        if (p[c] < 0) return false;
        if (static_cast<int>(c) >= span && p[c] != 0) return false;
        sum += p[c];
    }
    return sum <= 1;
}

}  // namespace

VerificationReport verify_construction(const NeuralCode& code, const VerifyOptions& options) {
    const ConstructedRealization r = construct(code);
    const NeuralCode canon = canonicalize(code);

    VerificationReport report;
    report.code_match = realized_code(r) == canon;
    report.paths_agree = realized_code(r) == realized_code_pointwise(r);

    report.atoms_disjoint = true;
    for (int i = 1; i <= r.k; ++i) {
        const RationalPoint w = witness_point(r, i);
        for (int other = 1; other <= r.k; ++other)
            if (atom_membership({other, r.ambient_dim}, w) != (other == i))
                report.atoms_disjoint = false;
    }

    std::mt19937_64 rng(options.seed);

    report.partition_ok = true;
    if (r.k > 0) {
        const int span = r.k - 1;
        for (int s = 0; s < options.partition_samples; ++s) {
            RationalPoint p;
            if (s % 2 == 0) {
                p = random_simplex_point(rng, span, r.ambient_dim);
            } else {
                // Box sample around the simplex; outside points must miss every atom.
                p.assign(static_cast<size_t>(r.ambient_dim), Rational(0));
                for (Rational& x : p)
                    x = Rational(static_cast<long>(detail::draw_below(rng, 25)) - 8, 8);
            }
            const int expected = in_closed_simplex(p, span) ? 1 : 0;
            if (atoms_containing(r, p) != expected) report.partition_ok = false;
            ++report.partition_samples;
        }
    }

    report.convexity_ok = true;
    std::vector<int> active;  // neurons covering at least one atom
    for (int j = 1; j <= r.n; ++j)
        if (!r.atoms_per_neuron[static_cast<size_t>(j - 1)].empty()) active.push_back(j);
    if (!active.empty()) {
        for (int s = 0; s < options.convexity_samples; ++s) {
            const int j = active[detail::draw_below(rng, active.size())];
            const auto& atoms = r.atoms_per_neuron[static_cast<size_t>(j - 1)];
            const int i1 = atoms[detail::draw_below(rng, atoms.size())];
            const int i2 = atoms[detail::draw_below(rng, atoms.size())];
            const RationalPoint p = random_atom_point(rng, i1, r.ambient_dim);
            const RationalPoint q = random_atom_point(rng, i2, r.ambient_dim);
            const Rational lambda(1 + static_cast<long>(detail::draw_below(rng, 15)), 16);
            RationalPoint m(static_cast<size_t>(r.ambient_dim));
            for (size_t c = 0; c < m.size(); ++c)
                m[c] = lambda * p[c] + (1 - lambda) * q[c];
            const std::optional<Codeword> support = codeword_at(r, m);
            if (!support || !support->contains(j)) report.convexity_ok = false;
            ++report.convexity_samples;
        }
    }

    return report;
}

}  // namespace neurocode
