#pragma once

#include <stdexcept>
#include <string>

namespace slamnc {

/// Base class for all slamnc error conditions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Acceleration sample too weak to extract a gravity direction.
struct DegenerateGravity : Error {
  using Error::Error;
};

/// Map insertion with a timestamp earlier than the last inserted point.
struct NonMonotonicTime : Error {
  using Error::Error;
};

/// Map estimate requested from an empty neighborhood.
struct EmptyNeighborhood : Error {
  using Error::Error;
};

/// A configuration struct failed validation.
struct InvalidConfig : Error {
  using Error::Error;
};

/// Kalman filter residual contains NaN or infinity.
struct NonFiniteResidual : Error {
  using Error::Error;
};

/// Every particle weight factor underflowed to zero.
struct AllZeroWeights : Error {
  using Error::Error;
};

/// Filter divergence detected while stepping the pipeline.
struct Divergence : Error {
  using Error::Error;
};

/// Step inputs arrived out of time order.
struct InputOrder : Error {
  using Error::Error;
};

/// Field sample requested too close to a dipole source.
struct TooCloseToSource : Error {
  using Error::Error;
};

/// Sphere fit attempted on coplanar/collinear points.
struct DegenerateGeometry : Error {
  using Error::Error;
};

/// Horizontal field too weak for compass heading extraction.
struct DegenerateHorizontalField : Error {
  using Error::Error;
};

/// A data file could not be parsed; message carries the line number.
struct ParseError : Error {
  using Error::Error;
};

/// A data file is missing required columns.
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace slamnc
