#include "neurocode/json_io.hpp"

#include <algorithm>

namespace neurocode {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(Errc::malformed_line, what); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

int need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

bool need_bool(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_boolean()) bad(std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

std::string need_string(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

json codeword_to_array(const Codeword& w) {
    json a = json::array();
    for (int j : w.indices()) a.push_back(j);
    return a;
}

Codeword codeword_from_array(const json& a, const char* what) {
    if (!a.is_array()) bad(std::string(what) + " must be an array of indices");
    std::vector<int> indices;
    for (const json& e : a) {
        if (!e.is_number_integer()) bad(std::string(what) + " must hold integers");
        const int idx = e.get<int>();
        if (!indices.empty() && idx <= indices.back())
            bad(std::string(what) + " must be strictly increasing");
        indices.push_back(idx);
    }
    return Codeword::from_indices(indices);
}

}  // namespace

json code_to_json(const NeuralCode& code) {
    json j;
    j["n"] = code.neuron_count();
    json words = json::array();
    for (const Codeword& w : code.codewords()) words.push_back(codeword_to_array(w));
    j["codewords"] = words;
    return j;
}

NeuralCode code_from_json(const json& j) {
    const int n = need_int(j, "n");
    const json& arr = need(j, "codewords");
    if (!arr.is_array()) bad("'codewords' must be an array");
    std::vector<Codeword> words;
    for (const json& e : arr) {
        Codeword w = codeword_from_array(e, "codeword");
        if (std::find(words.begin(), words.end(), w) != words.end())
            raise(Errc::duplicate_codeword, "duplicate codeword " + to_string(w));
        words.push_back(w);
    }
    return NeuralCode(n, std::move(words));
}

namespace {

std::string stimulus_name(Stimulus s) {
    return s == Stimulus::whole_space ? "whole_space" : "union_only";
}

Stimulus stimulus_from_name(const std::string& s) {
    if (s == "whole_space") return Stimulus::whole_space;
    if (s == "union_only") return Stimulus::union_only;
    bad("unknown stimulus '" + s + "'");
}

std::string line_stimulus_name(LineStimulus s) {
    return s == LineStimulus::whole_line ? "whole_line" : "union_only";
}

LineStimulus line_stimulus_from_name(const std::string& s) {
    if (s == "whole_line") return LineStimulus::whole_line;
    if (s == "union_only") return LineStimulus::union_only;
    bad("unknown stimulus '" + s + "'");
}

}  // namespace

json realization_to_json(const ConstructedRealization& r) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["ambient_dim"] = r.ambient_dim;
    json order = json::array();
    for (const Codeword& w : r.order) order.push_back(codeword_to_array(w));
    j["order"] = order;
    json atoms = json::array();
    for (const std::vector<int>& a : r.atoms_per_neuron) atoms.push_back(a);
    j["atoms_per_neuron"] = atoms;
    j["stimulus"] = stimulus_name(r.stimulus);
    return j;
}

ConstructedRealization realization_from_json(const json& j) {
    ConstructedRealization r;
    r.n = need_int(j, "n");
    r.k = need_int(j, "k");
    r.ambient_dim = need_int(j, "ambient_dim");
    if (r.n < 0 || r.n > Codeword::max_neurons) bad("neuron count out of range");
    if (r.k < 0) bad("negative codeword count");
    if (r.ambient_dim < 0) bad("negative ambient dimension");
    if (r.k > 0 && r.ambient_dim < r.k - 1) bad("ambient dimension too small for the atoms");

    const json& order = need(j, "order");
    if (!order.is_array() || static_cast<int>(order.size()) != r.k)
        bad("'order' must list exactly k codewords");
    for (const json& e : order) {
        Codeword w = codeword_from_array(e, "order entry");
        if (w.empty()) bad("'order' entries must be nonempty");
        if (w.max_index() > r.n) bad("'order' entry exceeds neuron count");
        r.order.push_back(w);
    }

    const json& atoms = need(j, "atoms_per_neuron");
    if (!atoms.is_array() || static_cast<int>(atoms.size()) != r.n)
        bad("'atoms_per_neuron' must have one entry per neuron");
    for (const json& e : atoms) {
        if (!e.is_array()) bad("'atoms_per_neuron' entries must be arrays");
        std::vector<int> a;
        for (const json& v : e) {
            if (!v.is_number_integer()) bad("atom indices must be integers");
            const int i = v.get<int>();
            if (i < 1 || i > r.k) bad("atom index out of 1..k");
            if (!a.empty() && i <= a.back()) bad("atom indices must be strictly increasing");
            a.push_back(i);
        }
        r.atoms_per_neuron.push_back(std::move(a));
    }

    for (int j_neuron = 1; j_neuron <= r.n; ++j_neuron) {
        const std::vector<int>& a = r.atoms_per_neuron[static_cast<size_t>(j_neuron - 1)];
        for (int i = 1; i <= r.k; ++i) {
            const bool listed = std::find(a.begin(), a.end(), i) != a.end();
            const bool in_word = r.order[static_cast<size_t>(i - 1)].contains(j_neuron);
            if (listed != in_word)
                bad("atoms_per_neuron disagrees with order at neuron " +
                    std::to_string(j_neuron) + ", atom " + std::to_string(i));
        }
    }

    r.stimulus = stimulus_from_name(need_string(j, "stimulus"));
    return r;
}

namespace {

json interval_to_json(const IntervalSet& s) {
    json j;
    if (s.is_empty()) {
        j["empty"] = true;
        return j;
    }
    j["lo"] = s.lo() ? rational_to_string(*s.lo()) : "-inf";
    j["lo_closed"] = s.lo_closed();
    j["hi"] = s.hi() ? rational_to_string(*s.hi()) : "inf";
    j["hi_closed"] = s.hi_closed();
    return j;
}

IntervalSet interval_from_json(const json& j) {
    if (!j.is_object()) bad("interval must be an object");
    if (j.contains("empty")) {
        if (!j.at("empty").is_boolean() || !j.at("empty").get<bool>())
            bad("'empty' must be true when present");
        return IntervalSet::empty_set();
    }
    const std::string lo_text = need_string(j, "lo");
    const std::string hi_text = need_string(j, "hi");
    std::optional<Rational> lo, hi;
    if (lo_text != "-inf") lo = parse_rational(lo_text);
    if (hi_text != "inf") hi = parse_rational(hi_text);
    return IntervalSet::make(std::move(lo), need_bool(j, "lo_closed"), std::move(hi),
                             need_bool(j, "hi_closed"));
}

}  // namespace

json realization1d_to_json(const Realization1D& r) {
    json j;
    j["n"] = r.n;
    j["stimulus"] = line_stimulus_name(r.stimulus);
    json intervals = json::array();
    for (const IntervalSet& s : r.intervals) intervals.push_back(interval_to_json(s));
    j["intervals"] = intervals;
    return j;
}

Realization1D realization1d_from_json(const json& j) {
    Realization1D r;
    r.n = need_int(j, "n");
    r.stimulus = line_stimulus_from_name(need_string(j, "stimulus"));
    const json& intervals = need(j, "intervals");
    if (!intervals.is_array() || static_cast<int>(intervals.size()) != r.n)
        bad("'intervals' must have one entry per neuron");
    for (const json& e : intervals) r.intervals.push_back(interval_from_json(e));
    return r;
}

namespace {

std::string upper_source_name(UpperSource s) {
    switch (s) {
        case UpperSource::theorem1: return "theorem1";
        case UpperSource::dim1_search: return "dim1_search";
        case UpperSource::degenerate: return "degenerate";
    }
    return "theorem1";
}

UpperSource upper_source_from_name(const std::string& s) {
    if (s == "theorem1") return UpperSource::theorem1;
    if (s == "dim1_search") return UpperSource::dim1_search;
    if (s == "degenerate") return UpperSource::degenerate;
    bad("unknown upper_source '" + s + "'");
}

}  // namespace

json bounds_to_json(const DimensionBounds& b) {
    json j;
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    j["tight"] = b.tight();
    if (b.lower_witness) j["lower_witness"] = codeword_to_array(*b.lower_witness);
    j["upper_source"] = upper_source_name(b.upper_source);
    return j;
}

DimensionBounds bounds_from_json(const json& j) {
    DimensionBounds b;
    b.lower = need_int(j, "lower");
    b.upper = need_int(j, "upper");
    if (b.lower < 0 || b.upper < b.lower) bad("bounds out of order");
    if (j.contains("lower_witness")) b.lower_witness = codeword_from_array(j.at("lower_witness"), "lower_witness");
    b.upper_source = upper_source_from_name(need_string(j, "upper_source"));
    return b;
}

json openify_report_to_json(const OpenifyReport& report) {
    json j;
    j["epsilon"] = rational_to_string(report.epsilon);
    j["epsilon_fallback"] = report.epsilon_fallback;
    j["equal"] = report.equal;
    j["before"] = code_to_json(report.before);
    j["after"] = code_to_json(report.after);
    j["realization_after"] = realization1d_to_json(report.realization_after);
    return j;
}

OpenifyReport openify_report_from_json(const json& j) {
    OpenifyReport report;
    report.epsilon = parse_rational(need_string(j, "epsilon"));
    report.epsilon_fallback = need_bool(j, "epsilon_fallback");
    report.equal = need_bool(j, "equal");
    report.before = code_from_json(need(j, "before"));
    report.after = code_from_json(need(j, "after"));
    report.realization_after = realization1d_from_json(need(j, "realization_after"));
    return report;
}

json verification_report_to_json(const VerificationReport& report) {
    json j;
    j["pass"] = report.pass();
    j["code_match"] = report.code_match;
    j["paths_agree"] = report.paths_agree;
    j["atoms_disjoint"] = report.atoms_disjoint;
    j["partition_ok"] = report.partition_ok;
    j["convexity_ok"] = report.convexity_ok;
    j["partition_samples"] = report.partition_samples;
    j["convexity_samples"] = report.convexity_samples;
    return j;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(Errc::malformed_line, "invalid JSON document");
    return j;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace neurocode
