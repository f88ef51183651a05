#include "skeinlab/rational.hpp"

#include <limits>
#include <stdexcept>

namespace skeinlab {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

bool fits_int64(const Integer& z) {
    static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return z >= lo && z <= hi;
}

std::int64_t to_int64(const Integer& z) {
    if (!fits_int64(z)) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    return std::stoll(z.get_str());
}

}  // namespace skeinlab
