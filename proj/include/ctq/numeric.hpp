#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ctq {

/// Arbitrary precision integer. Expression templates are off so the type
/// behaves as a plain value inside Eigen matrices.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
/// Exact rational.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Coefficient list of a polynomial in q, constant term first.
using QPoly = std::vector<BigInt>;

inline std::string to_string(const BigInt &v) { return v.str(); }
inline std::string to_string(const Rational &v) { return v.str(); }

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Drops trailing zero coefficients.
void trim(QPoly &p);
QPoly add(const QPoly &a, const QPoly &b);
QPoly multiply(const QPoly &a, const QPoly &b);
BigInt evaluate_at_one(const QPoly &p);

} // namespace ctq
