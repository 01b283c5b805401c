#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace joints {

// ~166-bit mantissa; bound reports promise 1e-12 relative error and get ~1e-45.
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real real_sqrt(std::uint64_t n) { return boost::multiprecision::sqrt(Real(n)); }

/// L^{3/2}
inline Real pow_three_halves(std::uint64_t n) { return Real(n) * real_sqrt(n); }

/// Fixed, locale-independent decimal rendering (significant digits).
std::string format_real(const Real& value, int digits = 30);

inline double to_double(const Real& value) { return value.convert_to<double>(); }

}  // namespace joints
