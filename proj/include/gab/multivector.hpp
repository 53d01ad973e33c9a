#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gab/signature.hpp"

namespace gab {

/// Domain error raised by algebra and geometry operations (signature
/// mismatch, degenerate spans, invalid inputs, ...).
struct ga_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Number of generators in a blade.
int grade_of(uint32_t bits);

/// Sign (+1/-1) picked up when reordering the concatenation of two
/// canonically ordered generator sets into a single ascending sequence.
int reorder_sign(uint32_t a, uint32_t b);

/// Sparse multivector: a blade -> coefficient map over a fixed signature.
///
/// Invariants: no stored coefficient is exactly zero (every operation
/// prunes), all blades are valid for the owning signature, and operations
/// mixing signatures throw.  Values are immutable after construction in
/// the sense that all operations return fresh multivectors.
class Multivector {
public:
  explicit Multivector(SignaturePtr sig) : sig_(std::move(sig)) {
    if (!sig_) throw ga_error("multivector requires a signature");
  }

  static Multivector scalar(SignaturePtr sig, double value);
  static Multivector blade(SignaturePtr sig, uint32_t bits, double coeff = 1.0);
  static Multivector generator(SignaturePtr sig, int index);
  /// Grade-1 Euclidean vector from coordinates (x1..xn), no e0/ni part.
  static Multivector euclidean(SignaturePtr sig, const std::vector<double>& coords);

  const SignaturePtr& signature() const { return sig_; }
  const std::map<uint32_t, double>& terms() const { return terms_; }

  double coeff(uint32_t bits) const;
  double scalar_part() const { return coeff(0); }
  bool is_zero() const { return terms_.empty(); }
  /// True when every coefficient magnitude is <= eps.
  bool is_zero(double eps) const;
  bool is_scalar() const;
  double max_abs_coeff() const;
  /// Sorted list of grades present.
  std::vector<int> grades() const;
  /// Largest grade present, -1 for the zero multivector.
  int top_grade() const;

  Multivector operator-() const;
  Multivector operator+(const Multivector& other) const;
  Multivector operator-(const Multivector& other) const;
  Multivector operator*(double s) const;
  friend Multivector operator*(double s, const Multivector& m) { return m * s; }

  bool operator==(const Multivector& other) const;
  bool operator!=(const Multivector& other) const { return !(*this == other); }

  /// Canonical text: terms sorted by (grade, blade bits), rendered as
  /// "coeff*blade" with coefficients in %.12g format ("1*e0 + 0.5*ni",
  /// "-1*e023", "0").
  std::string to_string() const;

  /// Copy with every |coefficient| <= eps removed.
  Multivector pruned(double eps) const;

  // Internal term accumulation; prunes exact zeros.
  void add_term(uint32_t bits, double value);

private:
  SignaturePtr sig_;
  std::map<uint32_t, double> terms_;
};

/// Clifford (geometric) product.  CGA inputs are expanded onto the internal
/// diagonal basis, multiplied with the orthogonal-blade bitmask rule and
/// converted back; blade-pair products are memoized per signature.
Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Antisymmetrized grade-raising part; metric-free.
Multivector outer_product(const Multivector& a, const Multivector& b);

/// Left contraction: per blade pair the grade (|b| - |a|) part of the
/// geometric product.
Multivector left_contraction(const Multivector& a, const Multivector& b);

/// Independent geometric product by direct multilinear Gram-matrix
/// expansion (no basis change).  Verification twin of geometric_product.
Multivector oracle_product(const Multivector& a, const Multivector& b);

Multivector reverse(const Multivector& a);
Multivector grade_involution(const Multivector& a);
Multivector grade_project(const Multivector& a, int k);

/// Scalar part of the geometric product.
double scalar_product(const Multivector& a, const Multivector& b);

/// Linear extension of a per-generator substitution, applied blade-wise
/// through the metric-free wedge (every blade is a wedge of generators).
Multivector substitute_generators(const Multivector& a,
                                  const Signature::Substitution& subst);

/// Componentwise comparison within an absolute tolerance.
bool approx_equal(const Multivector& a, const Multivector& b, double tol);

/// Equality up to a nonzero scalar factor: the scale is taken from the
/// ratio at a's largest-magnitude blade.
bool equivalent(const Multivector& a, const Multivector& b, double tol = 1e-9);

/// An invertible versor with its parity.  V * reverse(V) must be a nonzero
/// scalar; make_versor checks this (tolerance 1e-9, exact for integer
/// coefficients) and infers the parity from the grades present.
struct Versor {
  Multivector value;
  bool odd = false;
};

Versor make_versor(Multivector value);
/// Divides by sqrt(|V * reverse(V)|).
Versor normalize_versor(const Versor& v);
/// Sandwich action V X reverse(V) for even versors (grade involution of X
/// is applied first for odd ones).  Requires a normalized versor.
Multivector apply_versor(const Versor& v, const Multivector& x);

}  // namespace gab
