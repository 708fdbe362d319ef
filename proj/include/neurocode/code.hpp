#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "neurocode/errors.hpp"
#include "neurocode/rational.hpp"

namespace neurocode {

/// A set of neuron indices out of 1..n, stored as a bit mask (bit j-1 holds
/// neuron j). The empty codeword is mask 0.
class Codeword {
public:
    static constexpr int max_neurons = 62;

    Codeword() = default;
    explicit Codeword(std::uint64_t mask) : mask_(mask) {}

    /// Builds from 1-based indices; duplicates collapse (set semantics).
    static Codeword from_indices(const std::vector<int>& indices);

    std::uint64_t mask() const { return mask_; }
    bool empty() const { return mask_ == 0; }
    int size() const;
    bool contains(int neuron) const;
    bool subset_of(Codeword other) const { return (mask_ & other.mask_) == mask_; }
    Codeword intersect(Codeword other) const { return Codeword(mask_ & other.mask_); }
    Codeword unite(Codeword other) const { return Codeword(mask_ | other.mask_); }
    Codeword with(int neuron) const;
    Codeword without(int neuron) const;
    int max_index() const;
    std::vector<int> indices() const;

    friend bool operator==(Codeword a, Codeword b) { return a.mask_ == b.mask_; }

private:
    std::uint64_t mask_ = 0;
};

/// Size, then lexicographic on the ascending index sequences. The canonical
/// order used for codes, complexes and the construction's atom order.
bool canonical_less(Codeword a, Codeword b);

/// Plain lexicographic order on ascending index sequences ({1,4} < {2,3}).
bool lex_less(Codeword a, Codeword b);

std::string to_string(Codeword word);

/// A binary code: a set of codewords over neurons 1..n. The codeword order is
/// preserved as given (parsing keeps file order); equality is set equality.
class NeuralCode {
public:
    NeuralCode() = default;
    NeuralCode(int neuron_count, std::vector<Codeword> codewords);

    int neuron_count() const { return n_; }
    const std::vector<Codeword>& codewords() const { return words_; }
    bool contains(Codeword word) const;
    bool has_empty_codeword() const;

    /// k in the construction: codewords other than the empty one.
    int nonempty_count() const;
    std::vector<Codeword> nonempty_codewords() const;

    bool is_canonical() const;

    friend bool operator==(const NeuralCode& a, const NeuralCode& b);

private:
    int n_ = 0;
    std::vector<Codeword> words_;
};

/// Downward-closed family of faces, stored through its maximal faces.
class SimplicialComplex {
public:
    SimplicialComplex(int neuron_count, const std::vector<Codeword>& faces);

    int neuron_count() const { return n_; }
    const std::vector<Codeword>& maximal_faces() const { return maximal_; }

    /// Membership by scanning maximal faces: O(#maximal) per query.
    bool is_face(Codeword sigma) const;

private:
    int n_ = 0;
    std::vector<Codeword> maximal_;
};

enum class ParseMode { strict, lenient };

/// Reads the .code text format ('#' comments, optional "n=<int>" header, one
/// codeword per line as strictly increasing indices, "-" for the empty
/// codeword). Strict mode rejects duplicate codewords.
NeuralCode parse_code(std::string_view text, ParseMode mode = ParseMode::strict);

/// Canonical text form; parse_code(format_code(c)) == c for canonical codes.
std::string format_code(const NeuralCode& code);

/// Duplicates removed, codewords in canonical order. Preserves n.
NeuralCode canonicalize(const NeuralCode& code);

/// The downward closure of the codewords, kept via maximal faces.
SimplicialComplex simplicial_complex(const NeuralCode& code);

/// All inclusion-minimal subsets of [n] that are not faces, in canonical
/// order. Computed by incremental minimal-transversal accumulation over the
/// complements of the maximal faces, so no 2^n sweep is involved.
std::vector<Codeword> minimal_nonfaces(const SimplicialComplex& complex);

/// The code of all codewords of size n-1 on n neurons (n >= 2).
NeuralCode generate_cn(int n);

/// Deterministic fuzz generator: every nonempty subset of [n] is included
/// with an independent fair coin, the empty codeword with the given rational
/// probability; redraws until at least one nonempty codeword is present.
NeuralCode random_code(int n, std::uint64_t seed, const Rational& include_empty_prob);

/// True iff every intersection of a nonempty collection of inclusion-maximal
/// codewords is itself a codeword.
bool is_max_intersection_complete(const NeuralCode& code);

}  // namespace neurocode
