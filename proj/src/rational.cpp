#include "neurocode/rational.hpp"

#include <cctype>

#include "neurocode/errors.hpp"

namespace neurocode {

Rational make_rational(long num, long den) {
    if (den == 0) raise(Errc::bad_parameter, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    // mpq_class's string constructor neither validates nor canonicalizes, and
    // a zero denominator aborts the process inside GMP, so vet the input here.
    size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_token(num))
        raise(Errc::malformed_line, "bad rational '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (!is_integer_token(den) || den.front() == '-')
            raise(Errc::malformed_line, "bad rational '" + std::string(text) + "'");
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        raise(Errc::malformed_line, "bad rational '" + std::string(text) + "'");
    if (r.get_den() == 0)
        raise(Errc::malformed_line, "zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& value) {
    Rational r = value;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace neurocode
