#pragma once

#include <string>

#include "gab/multivector.hpp"

namespace gab {

/// Interpreted multivector: what the value represents and in which
/// representation it lives.  Entities are homogeneous: values equal up to
/// a nonzero scalar factor stand for the same object.
enum class Kind { Point, FlatPoint, Line, Plane, Sphere, Circle };
enum class Rep { OpnsCga, IpnsCga, Pga };

std::string to_string(Kind k);
std::string to_string(Rep r);

struct GeometricEntity {
  Kind kind;
  Rep rep;
  Multivector value;
};

inline bool equivalent(const GeometricEntity& a, const GeometricEntity& b,
                       double tol = 1e-9) {
  return a.kind == b.kind && a.rep == b.rep && equivalent(a.value, b.value, tol);
}

}  // namespace gab
