#include "neurocode/code.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "rng_util.hpp"

namespace neurocode {

Codeword Codeword::from_indices(const std::vector<int>& indices) {
    std::uint64_t mask = 0;
    for (int j : indices) {
        if (j < 1 || j > max_neurons)
            raise(Errc::bad_parameter, "neuron index " + std::to_string(j) + " out of 1.." +
                                           std::to_string(max_neurons));
        mask |= std::uint64_t{1} << (j - 1);
    }
    return Codeword(mask);
}

int Codeword::size() const { return std::popcount(mask_); }

bool Codeword::contains(int neuron) const {
    return neuron >= 1 && neuron <= max_neurons && (mask_ >> (neuron - 1)) & 1;
}

Codeword Codeword::with(int neuron) const {
    return Codeword(mask_ | (std::uint64_t{1} << (neuron - 1)));
}

Codeword Codeword::without(int neuron) const {
    return Codeword(mask_ & ~(std::uint64_t{1} << (neuron - 1)));
}

int Codeword::max_index() const {
    return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_);
}

std::vector<int> Codeword::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

bool lex_less(Codeword a, Codeword b) {
    // The smallest index where the two sets differ decides: whichever set
    // owns it comes first (prefix rule included: the missing element is
    // "larger than everything").
    std::uint64_t diff = a.mask() ^ b.mask();
    if (diff == 0) return false;
    return (a.mask() >> std::countr_zero(diff)) & 1;
}

bool canonical_less(Codeword a, Codeword b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

std::string to_string(Codeword word) {
    if (word.empty()) return "{}";
    std::string out = "{";
    bool first = true;
    for (int j : word.indices()) {
        if (!first) out += ",";
        out += std::to_string(j);
        first = false;
    }
    return out + "}";
}

NeuralCode::NeuralCode(int neuron_count, std::vector<Codeword> codewords)
    : n_(neuron_count), words_(std::move(codewords)) {
    if (n_ < 0 || n_ > Codeword::max_neurons)
        raise(Errc::bad_parameter, "neuron count " + std::to_string(n_) + " out of range");
    for (const Codeword& w : words_)
        if (w.max_index() > n_)
            raise(Errc::bad_parameter,
                  "codeword " + to_string(w) + " exceeds neuron count " + std::to_string(n_));
}

bool NeuralCode::contains(Codeword word) const {
    return std::find(words_.begin(), words_.end(), word) != words_.end();
}

bool NeuralCode::has_empty_codeword() const { return contains(Codeword()); }

int NeuralCode::nonempty_count() const {
    int k = 0;
    for (const Codeword& w : words_)
        if (!w.empty()) ++k;
    return k;
}

std::vector<Codeword> NeuralCode::nonempty_codewords() const {
    std::vector<Codeword> out;
    out.reserve(words_.size());
    for (const Codeword& w : words_)
        if (!w.empty()) out.push_back(w);
    return out;
}

bool NeuralCode::is_canonical() const {
    for (size_t i = 1; i < words_.size(); ++i)
        if (!canonical_less(words_[i - 1], words_[i])) return false;
    return true;
}

bool operator==(const NeuralCode& a, const NeuralCode& b) {
    if (a.n_ != b.n_) return false;
    std::vector<std::uint64_t> ma, mb;
    for (const Codeword& w : a.words_) ma.push_back(w.mask());
    for (const Codeword& w : b.words_) mb.push_back(w.mask());
    std::sort(ma.begin(), ma.end());
    ma.erase(std::unique(ma.begin(), ma.end()), ma.end());
    std::sort(mb.begin(), mb.end());
    mb.erase(std::unique(mb.begin(), mb.end()), mb.end());
    return ma == mb;
}

NeuralCode canonicalize(const NeuralCode& code) {
    std::vector<Codeword> words = code.codewords();
    std::sort(words.begin(), words.end(), canonical_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return NeuralCode(code.neuron_count(), std::move(words));
}

namespace {

std::string_view trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

NeuralCode parse_code(std::string_view text, ParseMode mode) {
    int declared_n = -1;
    bool saw_codeword = false;
    std::vector<Codeword> words;
    std::unordered_set<std::uint64_t> seen;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view raw =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const std::string where = "line " + std::to_string(line_no);
        if (line.substr(0, 2) == "n=") {
            if (saw_codeword || declared_n >= 0)
                raise(Errc::malformed_line, where + ": header must appear once, before codewords");
            std::string rest(trim(line.substr(2)));
            if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }))
                raise(Errc::malformed_line, where + ": bad neuron count '" + rest + "'");
            long v = std::stol(rest);
            if (v < 0 || v > Codeword::max_neurons)
                raise(Errc::malformed_line, where + ": neuron count out of range");
            declared_n = static_cast<int>(v);
            continue;
        }

        Codeword word;
        if (line != "-") {
            std::istringstream iss{std::string(line)};
            std::string tok;
            int prev = 0;
            std::uint64_t mask = 0;
            while (iss >> tok) {
                if (!std::all_of(tok.begin(), tok.end(), [](char c) {
                        return std::isdigit(static_cast<unsigned char>(c));
                    }))
                    raise(Errc::malformed_line, where + ": non-integer token '" + tok + "'");
                long v = std::stol(tok);
                if (v < 1) raise(Errc::malformed_line, where + ": index must be >= 1");
                if (declared_n >= 0 && v > declared_n)
                    raise(Errc::malformed_line,
                          where + ": index " + tok + " exceeds declared n=" + std::to_string(declared_n));
                if (v > Codeword::max_neurons)
                    raise(Errc::malformed_line, where + ": index " + tok + " too large");
                if (v <= prev)
                    raise(Errc::malformed_line, where + ": indices must strictly increase");
                prev = static_cast<int>(v);
                mask |= std::uint64_t{1} << (v - 1);
            }
            word = Codeword(mask);
        }

        if (!seen.insert(word.mask()).second) {
            if (mode == ParseMode::strict)
                raise(Errc::duplicate_codeword, where + ": duplicate codeword " + to_string(word));
            continue;
        }
        words.push_back(word);
        saw_codeword = true;
    }

    if (words.empty()) raise(Errc::empty_code, "no codeword lines in input");

    int n = declared_n;
    if (n < 0) {
        n = 0;
        for (const Codeword& w : words) n = std::max(n, w.max_index());
    }
    return NeuralCode(n, std::move(words));
}

std::string format_code(const NeuralCode& code) {
    NeuralCode canon = canonicalize(code);
    std::string out = "n=" + std::to_string(canon.neuron_count()) + "\n";
    for (const Codeword& w : canon.codewords()) {
        if (w.empty()) {
            out += "-\n";
            continue;
        }
        bool first = true;
        for (int j : w.indices()) {
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
        }
        out += '\n';
    }
    return out;
}

SimplicialComplex::SimplicialComplex(int neuron_count, const std::vector<Codeword>& faces)
    : n_(neuron_count) {
    if (n_ < 0 || n_ > Codeword::max_neurons)
        raise(Errc::bad_parameter, "neuron count out of range");
    for (const Codeword& f : faces) {
        if (f.max_index() > n_)
            raise(Errc::bad_parameter, "face " + to_string(f) + " exceeds neuron count");
        bool dominated = false;
        for (const Codeword& g : faces)
            if (!(g == f) && f.subset_of(g)) {
                dominated = true;
                break;
            }
        if (!dominated && std::find(maximal_.begin(), maximal_.end(), f) == maximal_.end())
            maximal_.push_back(f);
    }
    std::sort(maximal_.begin(), maximal_.end(), canonical_less);
}

bool SimplicialComplex::is_face(Codeword sigma) const {
    for (const Codeword& m : maximal_)
        if (sigma.subset_of(m)) return true;
    return false;
}

SimplicialComplex simplicial_complex(const NeuralCode& code) {
    if (code.codewords().empty()) raise(Errc::empty_code, "cannot take the complex of an empty code");
    return SimplicialComplex(code.neuron_count(), code.codewords());
}

std::vector<Codeword> minimal_nonfaces(const SimplicialComplex& complex) {
    const int n = complex.neuron_count();
    const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));

    // Non-faces are exactly the transversals of the complements of the
    // maximal faces; the minimal ones are the minimal transversals.
    std::vector<std::uint64_t> edges;
    for (const Codeword& m : complex.maximal_faces()) {
        std::uint64_t e = full & ~m.mask();
        if (e == 0) return {};  // a maximal face covers [n]: no non-faces
        edges.push_back(e);
    }

    std::vector<std::uint64_t> trans{0};
    for (std::uint64_t e : edges) {
        std::vector<std::uint64_t> next;
        auto insert_minimal = [&next](std::uint64_t cand) {
            for (std::uint64_t s : next)
                if ((s & cand) == s) return;  // already dominated
            std::erase_if(next, [cand](std::uint64_t s) { return (s & cand) == cand; });
            next.push_back(cand);
        };
        for (std::uint64_t t : trans) {
            if (t & e) {
                insert_minimal(t);
            } else {
                for (std::uint64_t rest = e; rest != 0; rest &= rest - 1)
                    insert_minimal(t | (rest & ~(rest - 1)));
            }
        }
        trans = std::move(next);
    }

    std::vector<Codeword> out;
    out.reserve(trans.size());
    for (std::uint64_t t : trans) out.emplace_back(t);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

NeuralCode generate_cn(int n) {
    if (n < 2) raise(Errc::bad_parameter, "generate_cn needs n >= 2");
    if (n > Codeword::max_neurons) raise(Errc::bad_parameter, "n too large");
    const std::uint64_t full = ~std::uint64_t{0} >> (64 - n);
    std::vector<Codeword> words;
    for (int j = 1; j <= n; ++j) words.emplace_back(full & ~(std::uint64_t{1} << (j - 1)));
    std::sort(words.begin(), words.end(), canonical_less);
    return NeuralCode(n, std::move(words));
}

NeuralCode random_code(int n, std::uint64_t seed, const Rational& include_empty_prob) {
    if (n < 1) raise(Errc::bad_parameter, "random_code needs n >= 1");
    if (n > 20) raise(Errc::bad_parameter, "random_code capped at n <= 20");
    if (include_empty_prob < 0 || include_empty_prob > 1)
        raise(Errc::bad_parameter, "probability must lie in [0,1]");
    if (!include_empty_prob.get_den().fits_ulong_p())
        raise(Errc::bad_parameter, "probability denominator too large");

    std::mt19937_64 rng(seed);
    const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
    std::vector<Codeword> words;
    do {
        words.clear();
        for (std::uint64_t m = 1; m <= subsets; ++m)
            if (rng() & 1) words.emplace_back(m);
    } while (words.empty());
    if (detail::draw_bernoulli(rng, include_empty_prob)) words.emplace_back(0);

    std::sort(words.begin(), words.end(), canonical_less);
    return NeuralCode(n, std::move(words));
}

bool is_max_intersection_complete(const NeuralCode& code) {
    if (code.nonempty_count() == 0)
        raise(Errc::empty_code, "needs at least one nonempty codeword");

    std::vector<std::uint64_t> maximal;
    for (const Codeword& w : code.codewords()) {
        bool dominated = false;
        for (const Codeword& g : code.codewords())
            if (!(g == w) && w.subset_of(g)) {
                dominated = true;
                break;
            }
        if (!dominated && std::find(maximal.begin(), maximal.end(), w.mask()) == maximal.end())
            maximal.push_back(w.mask());
    }

    // Close the maximal codewords under pairwise intersection; the closure is
    // exactly the set of intersections over nonempty subcollections.
    std::unordered_set<std::uint64_t> closure(maximal.begin(), maximal.end());
    std::vector<std::uint64_t> work(maximal.begin(), maximal.end());
    while (!work.empty()) {
        std::uint64_t a = work.back();
        work.pop_back();
        for (std::uint64_t b : maximal) {
            std::uint64_t c = a & b;
            if (closure.insert(c).second) work.push_back(c);
        }
    }

    for (std::uint64_t c : closure)
        if (!code.contains(Codeword(c))) return false;
    return true;
}

}  // namespace neurocode
