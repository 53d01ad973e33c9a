#pragma once

#include "gab/entity.hpp"
#include "gab/multivector.hpp"

namespace gab::cga {

/// e0 and ni as multivectors of the given conformal signature.
Multivector origin(const SignaturePtr& sig);
Multivector infinity(const SignaturePtr& sig);

/// Conformal pseudoscalar I_c = e0 ^ e1 ^ ... ^ en ^ ni and its inverse
/// (-1)^{n(n-1)/2} I_c.
Multivector pseudoscalar(const SignaturePtr& sig);
Multivector pseudoscalar_inverse(const SignaturePtr& sig);

/// True for grade-1 vectors of the Euclidean sub-signature (no e0/ni
/// components); the zero multivector counts.
bool is_euclidean_vector(const Multivector& p);

/// Point embedding e0 + p + (p.p)/2 ni.  The input must be a Euclidean
/// grade-1 vector (no e0/ni components).
Multivector up(const Multivector& p);

/// Inverse of up for any nonzero multiple of a conformal point; rescales
/// the e0 coefficient to 1 and returns the Euclidean part.  Throws for
/// points at infinity (P . ni = 0) and for non-null inputs.
Multivector down(const Multivector& point);

/// CGA duality A _| I_c^{-1}.
Multivector dual(const Multivector& a);

/// Direct (OPNS) flat objects: P ^ ni, P1 ^ P2 ^ ni, P1 ^ P2 ^ P3 ^ ni.
/// A vanishing span (coincident/collinear points) is a domain error.
GeometricEntity flat_point(const Multivector& point);
GeometricEntity line(const Multivector& p1, const Multivector& p2);
GeometricEntity plane(const Multivector& p1, const Multivector& p2,
                      const Multivector& p3);

/// Dual (IPNS) sphere up(center) - r^2/2 ni; radius 0 gives the point.
GeometricEntity sphere_dual(const Multivector& center, double radius);

/// Incidence tests P ^ A = 0 (direct) and P _| A = 0 (dual), with
/// tolerance 1e-9 relative to the input magnitudes.  The entity must be
/// tagged with the matching representation.
bool opns_contains(const Multivector& point, const GeometricEntity& a);
bool ipns_contains(const Multivector& point, const GeometricEntity& a);

/// Translation versor 1 - t ni / 2 for a Euclidean vector t.
Versor translator(const Multivector& t);

/// Rotation versor cos(a/2) + sin(a/2) axis_dual for a normalized dual
/// line (axis_dual^2 = -1 within 1e-9).
Versor rotor(const Multivector& axis_dual, double angle);

}  // namespace gab::cga
