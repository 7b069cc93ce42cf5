#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homlab {

/// Degree plus multiplicity vector (d; m1,...,mr), multiplicities kept
/// sorted non-increasing. Degrees and entries may go non-positive while a
/// transformation chain is running; external literals are always positive.
struct PlaneType {
  int degree = 1;
  std::vector<int> mults;  // sorted non-increasing

  PlaneType() = default;
  PlaneType(int d, std::vector<int> m);

  /// Copy with zero entries removed (negative entries are kept: they carry
  /// the obstruction information in chain output).
  PlaneType stripped() const;

  long long mult_sum() const;
  long long mult_square_sum() const;

  bool operator==(const PlaneType& o) const = default;
};

/// Multiplicity vector without an attached degree, entries >= 1 sorted
/// non-increasing.
struct MultiplicitySet {
  std::vector<int> mults;

  MultiplicitySet() = default;
  explicit MultiplicitySet(std::vector<int> m);

  long long sum() const;
  long long square_sum() const;

  bool operator==(const MultiplicitySet& o) const = default;
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Literal syntax "d;m1,m2,..." with exponent shorthand "8;5,3^2,2^5".
/// Parsing and printing round-trip; the degree must be >= 1 and entries >= 1.
PlaneType parse_plane_type(const std::string& literal);
std::string to_string(const PlaneType& t);

MultiplicitySet parse_multiplicity_set(const std::string& literal);
std::string to_string(const MultiplicitySet& m);

}  // namespace homlab
