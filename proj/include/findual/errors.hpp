#pragma once

#include <stdexcept>
#include <string>

namespace findual {

/// Base class for all errors raised by the library. Every subclass carries
/// a minimal witness of the violated condition so that failures can be
/// replayed as standalone regression inputs.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The transitive closure of the input pairs contains a 2-cycle.
struct AntisymmetryViolation : Error {
  std::string a, b;
  AntisymmetryViolation(std::string a_, std::string b_)
      : Error("antisymmetry violation: " + a_ + " <= " + b_ + " <= " + a_),
        a(std::move(a_)),
        b(std::move(b_)) {}
};

/// A label was referenced that is not part of the carrier.
struct UnknownLabel : Error {
  std::string label;
  explicit UnknownLabel(std::string l)
      : Error("unknown label: " + l), label(std::move(l)) {}
};

/// An element was referenced that is not part of a lattice carrier.
struct UnknownElement : Error {
  std::string label;
  explicit UnknownElement(std::string l)
      : Error("unknown element: " + l), label(std::move(l)) {}
};

/// A map table violates x <= x' => f(x) <= f(x').
struct NotMonotone : Error {
  std::string x, y;
  NotMonotone(std::string x_, std::string y_)
      : Error("not monotone at " + x_ + " <= " + y_),
        x(std::move(x_)),
        y(std::move(y_)) {}
};

/// Witness quadruple for a failed weakening-closure check:
/// x <= xp, (xp, yp) in r, yp <= y, but (x, y) missing.
struct NotWeakeningClosed : Error {
  std::string x, xp, yp, y;
  NotWeakeningClosed(std::string x_, std::string xp_, std::string yp_, std::string y_)
      : Error("relation not weakening-closed: " + x_ + " <= " + xp_ + " r " + yp_ +
              " <= " + y_ + " but (" + x_ + ", " + y_ + ") missing"),
        x(std::move(x_)),
        xp(std::move(xp_)),
        yp(std::move(yp_)),
        y(std::move(y_)) {}
};

/// Composition of relations or Kleisli morphisms with incompatible endpoints.
struct SourceTargetMismatch : Error {
  SourceTargetMismatch() : Error("source/target mismatch in composition") {}
  explicit SourceTargetMismatch(const std::string& detail)
      : Error("source/target mismatch: " + detail) {}
};

/// A map was required to be open (images of down-sets are down-sets) but is not.
struct NotOpenMap : Error {
  std::string witness_set;
  explicit NotOpenMap(std::string w)
      : Error("map is not open; image of down-set " + w + " is not a down-set"),
        witness_set(std::move(w)) {}
};

/// The given order is not a lattice (some pair lacks a least upper or
/// greatest lower bound).
struct NotALattice : Error {
  std::string x, y;
  NotALattice(std::string x_, std::string y_, const std::string& which)
      : Error("not a lattice: pair (" + x_ + ", " + y_ + ") has no " + which),
        x(std::move(x_)),
        y(std::move(y_)) {}
};

/// Distributivity x /\ (y \/ z) = (x /\ y) \/ (x /\ z) failed.
struct NotDistributive : Error {
  std::string x, y, z;
  NotDistributive(std::string x_, std::string y_, std::string z_)
      : Error("lattice not distributive at (" + x_ + ", " + y_ + ", " + z_ + ")"),
        x(std::move(x_)),
        y(std::move(y_)),
        z(std::move(z_)) {}
};

/// A lattice map was required to preserve bottom and binary joins but does not.
struct NotHemimorphism : Error {
  explicit NotHemimorphism(const std::string& detail)
      : Error("not a hemimorphism: " + detail) {}
};

/// A two-variable map failed the separate join-preservation conditions.
struct NotBimorphism : Error {
  explicit NotBimorphism(const std::string& detail)
      : Error("not a bimorphism: " + detail) {}
};

/// A filter (or filter-of-filters) value does not fit the principal encoding.
struct EncodingError : Error {
  explicit EncodingError(const std::string& detail)
      : Error("filter encoding error: " + detail) {}
};

/// Extracted component family fails one of the monad morphism squares.
struct NotAMonadMorphism : Error {
  explicit NotAMonadMorphism(const std::string& witness)
      : Error("not a monad morphism: " + witness) {}
};

/// Generic mismatch of middle objects in categorical composites.
struct MismatchError : Error {
  explicit MismatchError(const std::string& detail) : Error("mismatch: " + detail) {}
};

/// Malformed JSON input; carries the document path of the offending node.
struct SchemaError : Error {
  std::string path;
  explicit SchemaError(std::string p, const std::string& detail)
      : Error("schema error at " + p + ": " + detail), path(std::move(p)) {}
};

/// A loaded object violates a structural invariant.
struct ValidationError : Error {
  std::string object;
  ValidationError(std::string obj, const std::string& detail)
      : Error("validation error in " + obj + ": " + detail), object(std::move(obj)) {}
};

struct UnknownSuite : Error {
  explicit UnknownSuite(const std::string& name) : Error("unknown suite: " + name) {}
};

struct UnknownBinding : Error {
  explicit UnknownBinding(const std::string& name) : Error("unknown binding: " + name) {}
};

}  // namespace findual
