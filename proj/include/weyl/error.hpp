#ifndef WEYL_ERROR_HPP
#define WEYL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weyl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InhomogeneousError : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

// A graded piece that would need infinitely many basis vectors.
class InfiniteDimensionalPiece : public Error {
 public:
  using Error::Error;
};

class NonCommutingOperators : public Error {
 public:
  using Error::Error;
};

// A resolution stopped before the stage a computation needs.
class TruncatedResolution : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace weyl

#endif
