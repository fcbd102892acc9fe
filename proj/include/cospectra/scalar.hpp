#pragma once

// Arbitrary-precision scalars and the dense Eigen types built on them.

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstddef>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };

  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };

  static inline int digits10() { return 0; }
};

namespace internal {

template <>
struct cast_impl<mpz_class, double> {
  static inline double run(const mpz_class& x) { return x.get_d(); }
};

template <>
struct cast_impl<mpq_class, double> {
  static inline double run(const mpq_class& x) { return x.get_d(); }
};

}  // namespace internal

}  // namespace Eigen

namespace cospectra {

using BigInt = mpz_class;
using BigRational = mpq_class;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<BigInt>;
using IntVector = VectorX<BigInt>;
using RationalVector = VectorX<BigRational>;

/// Dense 0-based vertex id.
using Vertex = std::size_t;

/// Standard basis vector e_v of length n.
template <typename Scalar>
VectorX<Scalar> basis_vector(std::size_t n, Vertex v) {
  VectorX<Scalar> e = VectorX<Scalar>::Zero(static_cast<Eigen::Index>(n));
  e(static_cast<Eigen::Index>(v)) = Scalar(1);
  return e;
}

/// Exact conversion of a finite double to a rational (doubles are dyadic).
inline BigRational to_rational(double x) { return BigRational(x); }

inline double to_double(const BigInt& x) { return x.get_d(); }
inline double to_double(const BigRational& x) { return x.get_d(); }

}  // namespace cospectra
