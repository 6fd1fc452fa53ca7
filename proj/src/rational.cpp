#include "strata/rational.hpp"

#include "strata/errors.hpp"

#include <cctype>

namespace strata {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    size_t start = 0;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) start = 1;
    if (!all_digits(num, start, num.size()))
        throw ParseError("bad rational literal '" + text + "'");
    if (slash != std::string::npos) {
        const std::string den = text.substr(slash + 1);
        if (!all_digits(den, 0, den.size()))
            throw ParseError("bad rational literal '" + text + "'");
        Int d(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        Rat r(Int(num), d);
        r.canonicalize();
        return r;
    }
    return Rat(Int(num));
}

std::string to_string(const Rat& x) {
    return x.get_str();
}

long to_long(const Rat& x) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p())
        throw ShapeError("rational " + x.get_str() + " is not a small integer");
    return x.get_num().get_si();
}

} // namespace strata
