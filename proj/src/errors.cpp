#include "neurocode/errors.hpp"

namespace neurocode {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::malformed_line: return "malformed_line";
        case Errc::duplicate_codeword: return "duplicate_codeword";
        case Errc::empty_code: return "empty_code";
        case Errc::bad_parameter: return "bad_parameter";
        case Errc::dimension_mismatch: return "dimension_mismatch";
        case Errc::index_out_of_range: return "index_out_of_range";
        case Errc::unbounded_interval: return "unbounded_interval";
        case Errc::dimension_too_high: return "dimension_too_high";
    }
    return "unknown";
}

}  // namespace neurocode
