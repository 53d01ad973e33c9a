#include "gab/signature.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace gab {

namespace {

int next_id() {
  static int counter = 0;
  return counter++;
}

}  // namespace

Signature::Signature(Model model, int n) : model_(model), dim_(n), id_(next_id()) {
  if (n < 1 || n > 8) throw std::invalid_argument("signature dimension must be in 1..8");

  if (model == Model::Pga || model == Model::Cga) names_.push_back("e0");
  for (int i = 1; i <= n; ++i) names_.push_back("e" + std::to_string(i));
  if (model == Model::Cga) names_.push_back("ni");

  const int g = generator_count();
  gram_.assign(g * g, 0);
  auto set = [&](int i, int j, int v) { gram_[i * g + j] = v; gram_[j * g + i] = v; };

  const int e0 = has_e0() ? 0 : -1;
  const int first_euclid = has_e0() ? 1 : 0;
  for (int i = 0; i < n; ++i) set(first_euclid + i, first_euclid + i, 1);
  if (model == Model::Cga) set(e0, ninf_index(), -1);

  diagonal_ = (model != Model::Cga);

  diag_metric_.assign(g, 0);
  for (int i = 0; i < g; ++i) diag_metric_[i] = gram(i, i);
  to_diag_.resize(g);
  from_diag_.resize(g);
  for (int i = 0; i < g; ++i) {
    to_diag_[i] = {{i, 1.0}};
    from_diag_[i] = {{i, 1.0}};
  }
  if (model == Model::Cga) {
    const int plus = 0;             // e+ reuses the e0 bit
    const int minus = ninf_index(); // e- reuses the ni bit
    diag_metric_[plus] = 1;
    diag_metric_[minus] = -1;
    // e0 = (e- - e+)/2, ni = e- + e+
    to_diag_[e0] = {{plus, -0.5}, {minus, 0.5}};
    to_diag_[ninf_index()] = {{plus, 1.0}, {minus, 1.0}};
    // e+ = ni/2 - e0, e- = ni/2 + e0
    from_diag_[plus] = {{e0, -1.0}, {ninf_index(), 0.5}};
    from_diag_[minus] = {{e0, 1.0}, {ninf_index(), 0.5}};
  }
}

std::string Signature::blade_name(uint32_t bits) const {
  if (bits == 0) return "1";
  std::string out;
  bool any_digit = false;
  for (int i = 0; i < generator_count(); ++i) {
    if (!(bits & (uint32_t{1} << i))) continue;
    if (has_ninf() && i == ninf_index()) continue;
    if (!any_digit) out += "e";
    any_digit = true;
    out += names_[i].substr(1);  // the digit part of "eK"
  }
  if (has_ninf() && (bits & (uint32_t{1} << ninf_index()))) out += "ni";
  return out;
}

SignaturePtr Signature::make_cached(Model model, int n) {
  static std::mutex mu;
  static std::map<std::pair<Model, int>, SignaturePtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{model, n}];
  if (!slot) slot = SignaturePtr(new Signature(model, n));
  return slot;
}

SignaturePtr Signature::euclidean(int n) { return make_cached(Model::Euclidean, n); }
SignaturePtr Signature::pga(int n) { return make_cached(Model::Pga, n); }
SignaturePtr Signature::cga(int n) { return make_cached(Model::Cga, n); }

}  // namespace gab
