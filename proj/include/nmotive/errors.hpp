#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nmotive/lattice.hpp"

namespace nmotive {

enum class ErrorClass {
  Input,         // malformed input: exit code 2
  Precondition,  // a mathematical hypothesis fails: exit code 3
  Internal,      // an invariant of the library broke
};

class Error : public std::runtime_error {
 public:
  Error(std::string kind, ErrorClass cls, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)), cls_(cls) {}

  const std::string& kind() const { return kind_; }
  ErrorClass error_class() const { return cls_; }

 private:
  std::string kind_;
  ErrorClass cls_;
};

#define NMOTIVE_SIMPLE_ERROR(Name, Cls)                                        \
  class Name : public Error {                                                  \
   public:                                                                     \
    explicit Name(const std::string& message) : Error(#Name, Cls, message) {} \
  };

NMOTIVE_SIMPLE_ERROR(ZeroVector, ErrorClass::Input)
NMOTIVE_SIMPLE_ERROR(NotInLattice, ErrorClass::Input)
NMOTIVE_SIMPLE_ERROR(DimensionMismatch, ErrorClass::Input)
NMOTIVE_SIMPLE_ERROR(OriginInSpan, ErrorClass::Precondition)
NMOTIVE_SIMPLE_ERROR(UnknownVariable, ErrorClass::Input)
NMOTIVE_SIMPLE_ERROR(ConeNotStrictlyConvex, ErrorClass::Input)
NMOTIVE_SIMPLE_ERROR(SupportOutsideCone, ErrorClass::Precondition)
NMOTIVE_SIMPLE_ERROR(OriginInSupport, ErrorClass::Precondition)
NMOTIVE_SIMPLE_ERROR(FaceNotInCone, ErrorClass::Precondition)
NMOTIVE_SIMPLE_ERROR(RayOutsideSupport, ErrorClass::Precondition)
NMOTIVE_SIMPLE_ERROR(NotARefinement, ErrorClass::Precondition)
NMOTIVE_SIMPLE_ERROR(NotOrthant, ErrorClass::Precondition)
NMOTIVE_SIMPLE_ERROR(NotWeightedHomogeneous, ErrorClass::Precondition)
NMOTIVE_SIMPLE_ERROR(StrictModeViolation, ErrorClass::Precondition)
NMOTIVE_SIMPLE_ERROR(ActionOrderError, ErrorClass::Internal)
NMOTIVE_SIMPLE_ERROR(InternalMismatch, ErrorClass::Internal)

#undef NMOTIVE_SIMPLE_ERROR

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error("SyntaxError", ErrorClass::Input,
              message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotConvenient : public Error {
 public:
  explicit NotConvenient(std::vector<LatticePoint> missing)
      : Error("NotConvenient", ErrorClass::Precondition, describe(missing)),
        missing_(std::move(missing)) {}
  const std::vector<LatticePoint>& missing_rays() const { return missing_; }

 private:
  static std::string describe(const std::vector<LatticePoint>& missing) {
    std::string s = "support misses the rays";
    for (const auto& r : missing) s += " " + to_string(r);
    return s;
  }
  std::vector<LatticePoint> missing_;
};

class Degenerate : public Error {
 public:
  Degenerate(std::vector<LatticePoint> face, std::vector<Rat> witness, std::string certificate)
      : Error("Degenerate", ErrorClass::Precondition, "face " + describe(face) + " is degenerate"),
        face_(std::move(face)),
        witness_(std::move(witness)),
        certificate_(std::move(certificate)) {}
  const std::vector<LatticePoint>& face() const { return face_; }
  /// Empty when only an irrational repeated root exists.
  const std::vector<Rat>& witness() const { return witness_; }
  const std::string& certificate() const { return certificate_; }

 private:
  static std::string describe(const std::vector<LatticePoint>& face) {
    std::string s = "{";
    for (std::size_t i = 0; i < face.size(); ++i) s += (i ? "," : "") + to_string(face[i]);
    return s + "}";
  }
  std::vector<LatticePoint> face_;
  std::vector<Rat> witness_;
  std::string certificate_;
};

}  // namespace nmotive
