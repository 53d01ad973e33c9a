#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gab {

/// Which family of quadratic form the algebra is built on.
enum class Model { Euclidean, Pga, Cga };

class Signature;
using SignaturePtr = std::shared_ptr<const Signature>;

/// Algebra descriptor: an ordered generator list plus its symmetric Gram
/// matrix of small integers.
///
/// Generator order is fixed as e0 < e1 < ... < en < ni (ni = the null
/// vector at infinity), so blade bit positions are stable across models:
/// bit 0 is e0 when the model has one, bit (n+1) is ni in the conformal
/// model, and the Euclidean generators sit in between.
///
/// Gram matrices:
///   Euclidean(n):  identity.
///   Pga(n):        e0.e0 = 0, ei.ej = delta_ij, e0.ei = 0.
///   Cga(n):        e0.e0 = ni.ni = 0, e0.ni = -1, ei.ej = delta_ij.
///
/// Instances are canonical: the factories cache one Signature per
/// (model, n), so pointer identity is value identity.
class Signature {
public:
  static SignaturePtr euclidean(int n);
  static SignaturePtr pga(int n);
  static SignaturePtr cga(int n);

  Model model() const { return model_; }
  /// Euclidean dimension n (not the generator count).
  int dim() const { return dim_; }
  int generator_count() const { return static_cast<int>(names_.size()); }
  /// Stable small id, usable as a cache key.
  int id() const { return id_; }

  int gram(int i, int j) const { return gram_[i * generator_count() + j]; }
  const std::string& generator_name(int i) const { return names_[i]; }

  bool has_e0() const { return model_ != Model::Euclidean; }
  bool has_ninf() const { return model_ == Model::Cga; }
  int e0_index() const { return 0; }
  int ninf_index() const { return generator_count() - 1; }

  /// True when the Gram matrix has no off-diagonal entries (Euclidean and
  /// PGA).  CGA products go through the internal diagonal basis instead.
  bool is_diagonal() const { return diagonal_; }

  /// Squares of the internal orthogonal basis used for products.  For CGA
  /// this is the {e+, e1..en, e-} basis with e+^2 = +1, e-^2 = -1, where
  /// e0 = (e- - e+)/2 and ni = e- + e+; e+ sits at bit 0 and e- at the ni
  /// bit.  For diagonal signatures it is just the Gram diagonal.
  const std::vector<int>& diagonal_metric() const { return diag_metric_; }

  /// Per-generator expansion into the internal diagonal basis, and back.
  /// Each entry is a list of (generator index, coefficient).
  using Substitution = std::vector<std::vector<std::pair<int, double>>>;
  const Substitution& to_diagonal() const { return to_diag_; }
  const Substitution& from_diagonal() const { return from_diag_; }

  uint32_t scalar_blade() const { return 0; }
  /// Full pseudoscalar of the algebra (all generators).
  uint32_t pseudoscalar_blade() const {
    return (uint32_t{1} << generator_count()) - 1;
  }

  bool valid_blade(uint32_t bits) const {
    return (bits >> generator_count()) == 0;
  }

  /// Canonical blade name: "1" for the scalar blade, otherwise "e" followed
  /// by the generator digits in ascending order, with "ni" for the infinity
  /// generator ("e023", "e1ni", "ni").
  std::string blade_name(uint32_t bits) const;

private:
  Signature(Model model, int n);
  static SignaturePtr make_cached(Model model, int n);

  Model model_;
  int dim_;
  int id_;
  bool diagonal_;
  std::vector<std::string> names_;
  std::vector<int> gram_;
  std::vector<int> diag_metric_;
  Substitution to_diag_;
  Substitution from_diag_;
};

}  // namespace gab
