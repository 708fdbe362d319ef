#include "neurocode/dimension_bounds.hpp"

#include <algorithm>

#include "neurocode/dim1_search.hpp"
#include "neurocode/simplex_realization.hpp"

namespace neurocode {

namespace {

void require_codewords(const NeuralCode& code) {
    if (code.codewords().empty()) raise(Errc::empty_code, "code has no codewords");
}

}  // namespace

std::optional<Codeword> helly_violation(const NeuralCode& code, int d) {
    require_codewords(code);
    if (d < 0) raise(Errc::bad_parameter, "dimension must be >= 0");
    // Minimal non-faces are in canonical order, so the first qualifying one
    // is the deterministic certificate.
    for (const Codeword& nonface : minimal_nonfaces(simplicial_complex(code)))
        if (nonface.size() >= d + 2) return nonface;
    return std::nullopt;
}

std::optional<Codeword> helly_violation_brute(const NeuralCode& code, int d) {
    require_codewords(code);
    if (d < 0) raise(Errc::bad_parameter, "dimension must be >= 0");
    const int n = code.neuron_count();
    if (n > 12) raise(Errc::bad_parameter, "brute-force route capped at n <= 12");

    // Downward-closure table over all 2^n subsets.
    std::vector<char> face(std::size_t{1} << n, 0);
    for (const Codeword& w : code.codewords()) face[w.mask()] = 1;
    for (std::uint64_t mask = (std::uint64_t{1} << n) - 1; mask > 0; --mask)
        if (face[mask])
            for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
                face[mask & ~(rest & ~(rest - 1))] = 1;

    std::vector<Codeword> order;
    order.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) order.emplace_back(mask);
    std::sort(order.begin(), order.end(), canonical_less);

    for (const Codeword& sigma : order) {
        if (sigma.size() < d + 2 || face[sigma.mask()]) continue;
        const std::vector<int> bits = sigma.indices();
        std::vector<int> pick(static_cast<size_t>(d) + 1);
        for (size_t c = 0; c < pick.size(); ++c) pick[c] = static_cast<int>(c);
        bool all_faces = true;
        while (all_faces) {
            std::uint64_t sub = 0;
            for (int idx : pick) sub |= std::uint64_t{1} << (bits[static_cast<size_t>(idx)] - 1);
            if (!face[sub]) {
                all_faces = false;
                break;
            }
            // next (d+1)-combination of sigma's indices
            int c = static_cast<int>(pick.size()) - 1;
            while (c >= 0 && pick[static_cast<size_t>(c)] ==
                                 static_cast<int>(bits.size()) - static_cast<int>(pick.size()) + c)
                --c;
            if (c < 0) break;
            ++pick[static_cast<size_t>(c)];
            for (size_t c2 = static_cast<size_t>(c) + 1; c2 < pick.size(); ++c2)
                pick[c2] = pick[c2 - 1] + 1;
        }
        if (all_faces) return sigma;
    }
    return std::nullopt;
}

int helly_lower_bound(const NeuralCode& code) {
    require_codewords(code);
    int largest = 0;
    for (const Codeword& nonface : minimal_nonfaces(simplicial_complex(code)))
        largest = std::max(largest, nonface.size());
    return std::max(0, largest - 1);
}

DimensionBounds embedding_dimension_bounds(const NeuralCode& code, bool refine_with_search) {
    require_codewords(code);
    const NeuralCode canon = canonicalize(code);

    DimensionBounds b;
    const ConstructedRealization r = construct(canon);
    b.upper = r.ambient_dim;
    b.upper_source = r.k == 0 ? UpperSource::degenerate : UpperSource::theorem1;
    b.lower = helly_lower_bound(canon);
    if (b.lower >= 1) b.lower_witness = helly_violation(canon, b.lower - 1);

    if (refine_with_search && b.lower <= 1 && b.upper > 1) {
        if (search_dim1(canon)) {
            b.upper = 1;
            b.upper_source = UpperSource::dim1_search;
        } else {
            // The exhausted search is the certificate; no Helly set exists
            // at this level.
            b.lower = 2;
            b.lower_witness.reset();
        }
    }
    return b;
}

}  // namespace neurocode
