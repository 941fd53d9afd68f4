#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace propb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) with exact arithmetic; zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

BigInt factorial(std::uint64_t n);

/// n * C(2n-1, n): the minimum number of ordered simple pairs in a
/// non-2-colorable n-uniform hypergraph.
BigInt bound(std::uint64_t n);

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace propb
