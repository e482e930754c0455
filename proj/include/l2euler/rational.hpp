/* Exact arbitrary-precision integers and rationals.
 *
 * All arithmetic in this library is exact; there is no floating-point mode.
 */
#ifndef L2EULER_RATIONAL_HPP
#define L2EULER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace l2euler {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

inline std::string to_string(const Rational& q) { return q.str(); }

// Rough byte footprint, used by the diagonalization size guard.
inline std::size_t byte_size(const Int& n)
{
    return n.backend().size() * sizeof(boost::multiprecision::limb_type);
}

inline std::size_t byte_size(const Rational& q)
{
    return byte_size(rat_num(q)) + byte_size(rat_den(q));
}

}  // namespace l2euler

#endif
