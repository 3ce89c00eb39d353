#ifndef GAUSSCUBIC_BIGINT_HPP_
#define GAUSSCUBIC_BIGINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gausscubic {

// Exact signed integers of arbitrary size.  Composition powers and Gauss sum
// products outgrow 64 bits quickly, so every ring coefficient uses this type.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& n) { return n.str(); }

inline BigInt bigint_from_decimal(const std::string& s) { return BigInt(s); }

}  // namespace gausscubic

#endif  // GAUSSCUBIC_BIGINT_HPP_
