#pragma once

#include <stdexcept>
#include <string>

namespace eckardt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range caller input (bad coefficient string, k out of range, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Every Salmon invariant vanishes: the point lies on V(sigma4, sigma5).
class BaseLocusPoint : public Error {
 public:
  using Error::Error;
};

/// The inverse of the invariant map was requested at a point where I40 = 0.
class InverseUndefined : public Error {
 public:
  using Error::Error;
};

/// An exact pentahedron operation needs all Sylvester coefficients nonzero.
class DegenerateForm : public Error {
 public:
  using Error::Error;
};

/// A multiplicity was requested at a point where I100 does not vanish.
class NotOnHypersurface : public Error {
 public:
  using Error::Error;
};

/// Path tracking finished without exactly 27 distinct lines.
class TrackingFailure : public Error {
 public:
  using Error::Error;
};

/// Tracking ended on singular Jacobians; the surface is likely not smooth.
class SingularSurface : public Error {
 public:
  using Error::Error;
};

}  // namespace eckardt
