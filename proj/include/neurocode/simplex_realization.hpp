#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "neurocode/code.hpp"
#include "neurocode/rational.hpp"

namespace neurocode {

/// Exact point of R^d; d = coords.size(), possibly 0.
using RationalPoint = std::vector<Rational>;

enum class Stimulus { whole_space, union_only };

/// The half-open simplex block S_i = conv{0,e_1,...,e_{i-1}} with its facet
/// conv{0,...,e_{i-2}} removed; S_1 is the origin alone. Distinct indices
/// give disjoint sets, and S_1 u ... u S_k is the closed simplex
/// conv{0,e_1,...,e_{k-1}}.
struct SimplexAtom {
    int index = 1;        // i in 1..k
    int ambient_dim = 0;  // dimension of the surrounding space
};

/// Output of construct(): neuron j covers the union of the atoms listed in
/// atoms_per_neuron[j-1], inside R^ambient_dim. stimulus records whether the
/// realization lives in the whole space (empty codeword realizable outside
/// the atoms) or only on the union of the covered sets.
struct ConstructedRealization {
    int n = 0;
    int k = 0;
    int ambient_dim = 0;
    std::vector<Codeword> order;                     // the nonempty codewords sigma_1..sigma_k
    std::vector<std::vector<int>> atoms_per_neuron;  // A_j = {i : j in sigma_i}, ascending
    Stimulus stimulus = Stimulus::union_only;
};

enum class OrderPolicy { canonical, input };

/// Builds the simplex-atom realization: atom i carries exactly the codeword
/// sigma_i, so every code is realized by convex sets. The ambient dimension
/// is k-1, except that a code whose only codewords are the empty one plus a
/// single sigma needs one real dimension to leave room for the empty
/// codeword (R^0 is a single point and cannot hold both).
ConstructedRealization construct(const NeuralCode& code, OrderPolicy policy = OrderPolicy::canonical);

/// Exact membership test for S_i: for i >= 2 the point must have all
/// coordinates >= 0, zeros from coordinate i on, coordinate sum <= 1, and
/// coordinate i-1 strictly positive; for i = 1 it must be the origin.
bool atom_membership(const SimplexAtom& atom, const RationalPoint& p);

/// Canonical interior sample of atom i: coordinates 1/i in positions
/// 1..i-1, zero elsewhere.
RationalPoint witness_point(const ConstructedRealization& r, int i);

/// The codeword realized at p: the set of neurons whose union covers p.
/// nullopt means p lies outside the stimulus space (possible only under
/// union_only).
std::optional<Codeword> codeword_at(const ConstructedRealization& r, const RationalPoint& p);

/// The realized code, read off combinatorially: {sigma_1..sigma_k}, plus the
/// empty codeword under whole_space.
NeuralCode realized_code(const ConstructedRealization& r);

/// The realized code, read off geometrically: codeword_at over every atom's
/// witness point, plus a point outside the atoms under whole_space. Agrees
/// with realized_code on every input; kept separate so tests can compare
/// the two routes.
NeuralCode realized_code_pointwise(const ConstructedRealization& r);

struct VerifyOptions {
    std::uint64_t seed = 0;
    int partition_samples = 64;   // random points of the closed simplex
    int convexity_samples = 64;   // random same-neuron point pairs
};

struct VerificationReport {
    bool code_match = false;       // realized_code == canonicalize(input)
    bool paths_agree = false;      // combinatorial vs pointwise extraction
    bool atoms_disjoint = false;   // each witness point hits exactly its own atom
    bool partition_ok = false;     // sampled simplex points lie in exactly one atom
    bool convexity_ok = false;     // midpoints of same-neuron pairs keep the neuron
    int partition_samples = 0;
    int convexity_samples = 0;

    bool pass() const {
        return code_match && paths_agree && atoms_disjoint && partition_ok && convexity_ok;
    }
};

/// End-to-end check of the construction on one code: builds it, compares the
/// realized code against the canonicalized input along both extraction
/// routes, and samples the geometric invariants (disjointness, simplex
/// partition, midpoint convexity) with exact arithmetic.
VerificationReport verify_construction(const NeuralCode& code, const VerifyOptions& options = {});

}  // namespace neurocode
