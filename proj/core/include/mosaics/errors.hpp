#pragma once

#include <stdexcept>
#include <string>

namespace mosaics {

// Base class for every exception thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- finite field errors ---

struct NonPrimeCharacteristic : Error {
  explicit NonPrimeCharacteristic(long long p)
      : Error("characteristic " + std::to_string(p) + " is not prime") {}
};

struct ReducibleModulus : Error {
  using Error::Error;
};

struct ZeroInverse : Error {
  ZeroInverse() : Error("multiplicative inverse of zero") {}
};

struct MixedFields : Error {
  MixedFields() : Error("operands belong to different fields") {}
};

struct EvenCharacteristic : Error {
  EvenCharacteristic()
      : Error("quadratic residues require odd characteristic") {}
};

struct NotPrimePower : Error {
  explicit NotPrimePower(long long q)
      : Error(std::to_string(q) + " is not a prime power") {}
};

struct BadCongruence : Error {
  using Error::Error;
};

// --- design / mosaic errors ---

struct NonIntegralParameters : Error {
  using Error::Error;
};

struct UnknownColour : Error {
  explicit UnknownColour(int colour)
      : Error("colour " + std::to_string(colour) + " is not in the scheme") {}
};

struct OverlappingBlocks : Error {
  int point;
  long long column;
  int first_colour;
  int second_colour;
  OverlappingBlocks(int point_, long long column_, int first, int second)
      : Error("column " + std::to_string(column_) + " covers point " +
              std::to_string(point_) + " in colours " +
              std::to_string(first) + " and " + std::to_string(second)),
        point(point_), column(column_), first_colour(first),
        second_colour(second) {}
};

struct UncoveredCell : Error {
  int point;
  long long column;
  UncoveredCell(int point_, long long column_)
      : Error("column " + std::to_string(column_) + " leaves point " +
              std::to_string(point_) + " uncovered"),
        point(point_), column(column_) {}
};

struct OrderMismatch : Error {
  using Error::Error;
};

struct NotAResolution : Error {
  using Error::Error;
};

// --- q-analogue errors ---

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DirectSumFailure : Error {
  using Error::Error;
};

// --- search errors ---

struct InfeasibleScheme : Error {
  using Error::Error;
};

// --- input / parse errors ---

struct ParseError : Error {
  using Error::Error;
};

}  // namespace mosaics
