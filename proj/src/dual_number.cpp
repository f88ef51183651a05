#include "skeinlab/dual_number.hpp"

#include <stdexcept>

namespace skeinlab {

DualNumber DualNumber::inverse() const {
    if (value == 0) throw std::domain_error("dual number with zero real part is not invertible");
    Rational inv = 1 / value;
    return {inv, -epsilon * inv * inv};
}

std::string DualNumber::to_string() const { return value.get_str() + " + " + epsilon.get_str() + "h"; }

}  // namespace skeinlab
