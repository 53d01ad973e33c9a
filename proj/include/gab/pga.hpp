#pragma once

#include <vector>

#include "gab/entity.hpp"
#include "gab/multivector.hpp"

namespace gab::pga {

// PGA values live inside the conformal signature as the subalgebra of
// blades without ni (CGA_0).  The involutive isomorphism sharp swaps that
// copy with the blades-without-e0 copy (CGA_inf):
//   sharp: ei -> ei, e0 -> -ni, ni -> -e0, extended as an algebra
// homomorphism blade by blade.

Multivector sharp(const Multivector& a);

/// True when no stored blade contains ni (resp. e0).
bool in_cga0(const Multivector& a);
bool in_cga_inf(const Multivector& a);

/// Projective pseudoscalar I = e0 ^ e1 ^ ... ^ en and the Euclidean
/// pseudoscalar I_E = e1 ^ ... ^ en, both inside the conformal signature.
Multivector pseudoscalar(const SignaturePtr& sig);
Multivector euclidean_pseudoscalar(const SignaturePtr& sig);

/// Euclidean duality X _| I_E^{-1} for Euclidean multivectors.
Multivector euclidean_dual(const Multivector& a);

/// Projective duality (-1)^{n(n+1)/2} (sharp(A) _| I).  Requires a value
/// in CGA_0.  At n = 3 the sign is +1 and the map reproduces the 16-entry
/// basis-blade table.
Multivector dual(const Multivector& a);

/// Verification twins of dual: sharp((A ^ ni)^*) and (sharp(A) ^ e0)^*
/// computed with the conformal duality; both agree with dual in every
/// dimension.
Multivector dual_via_sharp_of_cga(const Multivector& a);
Multivector dual_via_e0_wedge(const Multivector& a);

/// Second verification twin: decomposes A = C_E + D_E ^ e0 and returns
/// (-1)^n D_E^{*E} + C_E^{*E} ^ e0.
Multivector coordinate_dual(const Multivector& a);

/// Sign of dual(dual(A)) for this dimension, measured once; +1 at n = 3.
int double_dual_sign(const SignaturePtr& sig);

/// dual composed with the double-dual sign correction, so that
/// dual_inverse(dual(A)) = A in every dimension.
Multivector dual_inverse(const Multivector& a);

/// Regressive product dual_inverse(dual(A) ^ dual(B)).
Multivector regressive(const Multivector& a, const Multivector& b);

/// Grade-n point I_E + p^{*E} ^ e0 for a Euclidean vector p
/// (x e032 + y e013 + z e021 + e123 in coordinates at n = 3).
GeometricEntity point(const Multivector& p);

/// Flats by regressive products of points; a vanishing span is an error.
GeometricEntity line(const GeometricEntity& p1, const GeometricEntity& p2);
GeometricEntity plane(const GeometricEntity& p1, const GeometricEntity& p2,
                      const GeometricEntity& p3);

/// Translation versor 1 - e0 t / 2.
Versor translator(const Multivector& t);

/// Rotation versor cos(a/2) + sin(a/2) l for a PGA line whose Euclidean
/// part squares to -1 (use normalize_line first).  Ideal lines (zero
/// Euclidean part) are rejected.
Versor rotor(const Multivector& line, double angle);

/// Divides a line by the norm of its Euclidean part.
Multivector normalize_line(const Multivector& line);

/// One entry of the basis-blade duality table.
struct DualityTableRow {
  std::string input;
  std::string output;
  int sign;  // +1 or -1
};

/// Duality of every basis blade of PGA(n), ordered by (grade, blade name).
/// 2 <= n <= 6.
std::vector<DualityTableRow> duality_table(int n);

/// Aligned text rendering, one "input -> [-]output" line per blade.
std::string table_text(const std::vector<DualityTableRow>& rows);

/// JSON rendering: array of {"input", "output", "sign"} objects.
std::string table_json(const std::vector<DualityTableRow>& rows);

}  // namespace gab::pga
