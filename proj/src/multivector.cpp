#include "gab/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <unordered_map>

namespace gab {

int grade_of(uint32_t bits) { return std::popcount(bits); }

int reorder_sign(uint32_t a, uint32_t b) {
  // Count the transpositions needed to interleave b's generators into a.
  a >>= 1;
  int swaps = 0;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

Multivector Multivector::scalar(SignaturePtr sig, double value) {
  Multivector m(std::move(sig));
  m.add_term(0, value);
  return m;
}

Multivector Multivector::blade(SignaturePtr sig, uint32_t bits, double coeff) {
  Multivector m(std::move(sig));
  if (!m.sig_->valid_blade(bits)) throw ga_error("blade outside signature");
  m.add_term(bits, coeff);
  return m;
}

Multivector Multivector::generator(SignaturePtr sig, int index) {
  if (index < 0 || index >= sig->generator_count())
    throw ga_error("generator index outside signature");
  return blade(std::move(sig), uint32_t{1} << index, 1.0);
}

Multivector Multivector::euclidean(SignaturePtr sig, const std::vector<double>& coords) {
  if (static_cast<int>(coords.size()) > sig->dim())
    throw ga_error("too many coordinates for signature");
  Multivector m(sig);
  const int base = sig->has_e0() ? 1 : 0;
  for (size_t i = 0; i < coords.size(); ++i)
    m.add_term(uint32_t{1} << (base + i), coords[i]);
  return m;
}

double Multivector::coeff(uint32_t bits) const {
  auto it = terms_.find(bits);
  return it == terms_.end() ? 0.0 : it->second;
}

bool Multivector::is_zero(double eps) const {
  for (const auto& [bits, c] : terms_)
    if (std::fabs(c) > eps) return false;
  return true;
}

bool Multivector::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

double Multivector::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [bits, c] : terms_) m = std::max(m, std::fabs(c));
  return m;
}

std::vector<int> Multivector::grades() const {
  std::vector<int> out;
  for (const auto& [bits, c] : terms_) {
    int g = grade_of(bits);
    if (out.empty() || out.back() != g) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Multivector::top_grade() const {
  int g = -1;
  for (const auto& [bits, c] : terms_) g = std::max(g, grade_of(bits));
  return g;
}

void Multivector::add_term(uint32_t bits, double value) {
  if (value == 0.0) return;
  auto [it, inserted] = terms_.emplace(bits, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Multivector Multivector::operator-() const { return *this * -1.0; }

Multivector Multivector::operator+(const Multivector& other) const {
  if (sig_ != other.sig_) throw ga_error("signature mismatch in +");
  Multivector out = *this;
  for (const auto& [bits, c] : other.terms_) out.add_term(bits, c);
  return out;
}

Multivector Multivector::operator-(const Multivector& other) const {
  if (sig_ != other.sig_) throw ga_error("signature mismatch in -");
  Multivector out = *this;
  for (const auto& [bits, c] : other.terms_) out.add_term(bits, -c);
  return out;
}

Multivector Multivector::operator*(double s) const {
  Multivector out(sig_);
  for (const auto& [bits, c] : terms_) out.add_term(bits, c * s);
  return out;
}

bool Multivector::operator==(const Multivector& other) const {
  return sig_ == other.sig_ && terms_ == other.terms_;
}

namespace {

std::string format_coeff(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<uint32_t, double>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int ga = grade_of(a.first), gb = grade_of(b.first);
    if (ga != gb) return ga < gb;
    return a.first < b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [bits, c] : sorted) {
    const bool neg = c < 0.0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += format_coeff(std::fabs(c));
    if (bits != 0) {
      out += "*";
      out += sig_->blade_name(bits);
    }
  }
  return out;
}

Multivector Multivector::pruned(double eps) const {
  Multivector out(sig_);
  for (const auto& [bits, c] : terms_)
    if (std::fabs(c) > eps) out.add_term(bits, c);
  return out;
}

// ---------------------------------------------------------------------------
// Products.

namespace {

using TermList = std::vector<std::pair<uint32_t, double>>;

// Wedge of an expanded blade list with one substituted generator; the
// outer product of canonical blades is metric-free, so the same routine
// serves both basis directions.
TermList substitute_blade(uint32_t bits, const Signature::Substitution& subst, int gens) {
  TermList acc{{0u, 1.0}};
  for (int i = 0; i < gens; ++i) {
    if (!(bits & (uint32_t{1} << i))) continue;
    TermList next;
    next.reserve(acc.size() * subst[i].size());
    for (const auto& [b, c] : acc) {
      for (const auto& [gi, gc] : subst[i]) {
        const uint32_t gbit = uint32_t{1} << gi;
        if (b & gbit) continue;  // wedge with a repeated generator vanishes
        next.emplace_back(b | gbit, c * gc * reorder_sign(b, gbit));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// Exact (dyadic) geometric product of two basis blades, computed through
// the internal diagonal basis.  Coefficients stay dyadic rationals, so
// integer-coefficient inputs multiply exactly in double precision.
Multivector blade_product_uncached(const SignaturePtr& sig, uint32_t s, uint32_t t) {
  Multivector out(sig);
  const auto& metric = sig->diagonal_metric();
  const int gens = sig->generator_count();
  if (sig->is_diagonal()) {
    int sign = reorder_sign(s, t);
    uint32_t shared = s & t;
    double factor = sign;
    for (int i = 0; i < gens && shared; ++i) {
      if (shared & (uint32_t{1} << i)) {
        factor *= metric[i];
        shared &= ~(uint32_t{1} << i);
      }
    }
    out.add_term(s ^ t, factor);
    return out;
  }
  const TermList sd = substitute_blade(s, sig->to_diagonal(), gens);
  const TermList td = substitute_blade(t, sig->to_diagonal(), gens);
  for (const auto& [sb, sc] : sd) {
    for (const auto& [tb, tc] : td) {
      int sign = reorder_sign(sb, tb);
      double factor = sc * tc * sign;
      uint32_t shared = sb & tb;
      for (int i = 0; i < gens && shared; ++i) {
        if (shared & (uint32_t{1} << i)) {
          factor *= metric[i];
          shared &= ~(uint32_t{1} << i);
        }
      }
      if (factor == 0.0) continue;
      for (const auto& [nb, nc] : substitute_blade(sb ^ tb, sig->from_diagonal(), gens))
        out.add_term(nb, factor * nc);
    }
  }
  return out;
}

struct PairKey {
  int sig_id;
  uint32_t s, t;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  size_t operator()(const PairKey& k) const {
    uint64_t v = (uint64_t(uint32_t(k.sig_id)) << 40) ^ (uint64_t(k.s) << 20) ^ k.t;
    return std::hash<uint64_t>{}(v);
  }
};

const Multivector& blade_product(const SignaturePtr& sig, uint32_t s, uint32_t t) {
  static std::mutex mu;
  static std::unordered_map<PairKey, Multivector, PairKeyHash> cache;
  const PairKey key{sig->id(), s, t};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, blade_product_uncached(sig, s, t)).first;
  return it->second;
}

// Deterministic, sign-symmetric accumulation: contributions are grouped by
// exact magnitude, each group is collapsed to (net count) * magnitude, and
// groups are added in ascending magnitude order.  The resulting float is
// invariant under iteration order of the inputs and flips sign exactly when
// every contribution does, which keeps algebra isomorphisms (like the
// e0 <-> -ni swap) bit-exact on float coefficients.
double accumulate_canonical(std::vector<double>& vals) {
  std::sort(vals.begin(), vals.end(),
            [](double a, double b) { return std::fabs(a) < std::fabs(b); });
  double total = 0.0;
  size_t i = 0;
  while (i < vals.size()) {
    const double mag = std::fabs(vals[i]);
    long net = 0;
    while (i < vals.size() && std::fabs(vals[i]) == mag) {
      net += vals[i] > 0.0 ? 1 : -1;
      ++i;
    }
    if (net != 0 && mag != 0.0) total += static_cast<double>(net) * mag;
  }
  return total;
}

Multivector from_contributions(const SignaturePtr& sig,
                               std::map<uint32_t, std::vector<double>>& contrib) {
  Multivector out(sig);
  for (auto& [bits, vals] : contrib) out.add_term(bits, accumulate_canonical(vals));
  return out;
}

void require_same_signature(const Multivector& a, const Multivector& b, const char* op) {
  if (a.signature() != b.signature())
    throw ga_error(std::string("signature mismatch in ") + op);
}

}  // namespace

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b, "geometric product");
  std::map<uint32_t, std::vector<double>> contrib;
  for (const auto& [s, sc] : a.terms()) {
    for (const auto& [t, tc] : b.terms()) {
      const double st = sc * tc;
      for (const auto& [u, q] : blade_product(a.signature(), s, t).terms())
        contrib[u].push_back(st * q);
    }
  }
  return from_contributions(a.signature(), contrib);
}

Multivector outer_product(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b, "outer product");
  std::map<uint32_t, std::vector<double>> contrib;
  for (const auto& [s, sc] : a.terms()) {
    for (const auto& [t, tc] : b.terms()) {
      if (s & t) continue;
      contrib[s | t].push_back(sc * tc * reorder_sign(s, t));
    }
  }
  return from_contributions(a.signature(), contrib);
}

Multivector left_contraction(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b, "left contraction");
  std::map<uint32_t, std::vector<double>> contrib;
  for (const auto& [s, sc] : a.terms()) {
    const int gs = grade_of(s);
    for (const auto& [t, tc] : b.terms()) {
      const int target = grade_of(t) - gs;
      if (target < 0) continue;
      const double st = sc * tc;
      for (const auto& [u, q] : blade_product(a.signature(), s, t).terms())
        if (grade_of(u) == target) contrib[u].push_back(st * q);
    }
  }
  return from_contributions(a.signature(), contrib);
}

// ---------------------------------------------------------------------------
// Gram-expansion oracle.  Recursively peels the lowest generator v off the
// left blade S = v ^ B and uses
//   e_S e_T = v (B e_T) - (v _| B) e_T,
//   v M     = v _| M + v ^ M,
// with the vector contraction expanded by the Leibniz rule over the Gram
// matrix.  No basis change is involved.

namespace {

Multivector vector_contract_blade(const SignaturePtr& sig, int v, uint32_t blade) {
  Multivector out(sig);
  int position = 0;
  for (int j = 0; j < sig->generator_count(); ++j) {
    const uint32_t bit = uint32_t{1} << j;
    if (!(blade & bit)) continue;
    ++position;  // 1-based position of this factor inside the blade
    const int g = sig->gram(v, j);
    if (g != 0) out.add_term(blade & ~bit, ((position & 1) ? 1.0 : -1.0) * g);
  }
  return out;
}

Multivector vector_times(const SignaturePtr& sig, int v, const Multivector& m) {
  Multivector out(sig);
  const uint32_t vbit = uint32_t{1} << v;
  for (const auto& [bits, c] : m.terms()) {
    // v _| blade
    for (const auto& [rb, rc] : vector_contract_blade(sig, v, bits).terms())
      out.add_term(rb, c * rc);
    // v ^ blade
    if (!(bits & vbit)) out.add_term(vbit | bits, c * reorder_sign(vbit, bits));
  }
  return out;
}

Multivector oracle_blade_product(const SignaturePtr& sig, uint32_t s, uint32_t t);

const Multivector& oracle_blade_cached(const SignaturePtr& sig, uint32_t s, uint32_t t) {
  static std::mutex mu;
  static std::unordered_map<PairKey, Multivector, PairKeyHash> cache;
  const PairKey key{sig->id(), s, t};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Multivector value = oracle_blade_product(sig, s, t);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(value)).first->second;
}

Multivector oracle_blade_product(const SignaturePtr& sig, uint32_t s, uint32_t t) {
  if (s == 0) return Multivector::blade(sig, t);
  const uint32_t vbit = s & (~s + 1);  // lowest generator of S
  int v = std::countr_zero(vbit);
  const uint32_t rest = s ^ vbit;

  Multivector out = vector_times(sig, v, oracle_blade_cached(sig, rest, t));
  for (const auto& [cb, cc] : vector_contract_blade(sig, v, rest).terms())
    out = out - oracle_blade_cached(sig, cb, t) * cc;
  return out;
}

}  // namespace

Multivector oracle_product(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b, "oracle product");
  Multivector out(a.signature());
  for (const auto& [s, sc] : a.terms())
    for (const auto& [t, tc] : b.terms()) {
      const double st = sc * tc;
      for (const auto& [u, q] : oracle_blade_cached(a.signature(), s, t).terms())
        out.add_term(u, st * q);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Involutions and grade plumbing.

Multivector reverse(const Multivector& a) {
  Multivector out(a.signature());
  for (const auto& [bits, c] : a.terms()) {
    const int k = grade_of(bits);
    out.add_term(bits, ((k * (k - 1) / 2) & 1) ? -c : c);
  }
  return out;
}

Multivector grade_involution(const Multivector& a) {
  Multivector out(a.signature());
  for (const auto& [bits, c] : a.terms())
    out.add_term(bits, (grade_of(bits) & 1) ? -c : c);
  return out;
}

Multivector grade_project(const Multivector& a, int k) {
  Multivector out(a.signature());
  for (const auto& [bits, c] : a.terms())
    if (grade_of(bits) == k) out.add_term(bits, c);
  return out;
}

double scalar_product(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b).scalar_part();
}

Multivector substitute_generators(const Multivector& a,
                                  const Signature::Substitution& subst) {
  std::map<uint32_t, std::vector<double>> contrib;
  for (const auto& [bits, c] : a.terms())
    for (const auto& [nb, nc] :
         substitute_blade(bits, subst, a.signature()->generator_count()))
      contrib[nb].push_back(c * nc);
  return from_contributions(a.signature(), contrib);
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  if (a.signature() != b.signature()) return false;
  return (a - b).is_zero(tol);
}

bool equivalent(const Multivector& a, const Multivector& b, double tol) {
  if (a.signature() != b.signature()) return false;
  const double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  if (scale == 0.0) return true;
  if (a.is_zero(tol * scale) || b.is_zero(tol * scale))
    return a.is_zero(tol * scale) && b.is_zero(tol * scale);
  // Pick the scale from a's largest-magnitude blade.
  uint32_t pivot = 0;
  double best = -1.0;
  for (const auto& [bits, c] : a.terms())
    if (std::fabs(c) > best) { best = std::fabs(c); pivot = bits; }
  const double ratio = b.coeff(pivot) / a.coeff(pivot);
  if (ratio == 0.0 || !std::isfinite(ratio)) return false;
  return (b - a * ratio).is_zero(tol * std::max(1.0, b.max_abs_coeff()));
}

// ---------------------------------------------------------------------------
// Versors.

Versor make_versor(Multivector value) {
  const Multivector vvt = geometric_product(value, reverse(value));
  const double s = vvt.scalar_part();
  const double scale = std::max(1.0, value.max_abs_coeff() * value.max_abs_coeff());
  if (std::fabs(s) <= 1e-9 * scale)
    throw ga_error("versor has zero norm");
  if (!(vvt - Multivector::scalar(value.signature(), s)).is_zero(1e-9 * scale))
    throw ga_error("V * reverse(V) is not a scalar");
  bool any_odd = false, any_even = false;
  for (int g : value.grades()) ((g & 1) ? any_odd : any_even) = true;
  if (any_odd && any_even) throw ga_error("versor mixes even and odd grades");
  return Versor{std::move(value), any_odd};
}

Versor normalize_versor(const Versor& v) {
  const double s = scalar_product(v.value, reverse(v.value));
  if (s == 0.0) throw ga_error("cannot normalize a null versor");
  return Versor{v.value * (1.0 / std::sqrt(std::fabs(s))), v.odd};
}

Multivector apply_versor(const Versor& v, const Multivector& x) {
  const Multivector& arg = x;
  const Multivector mid = v.odd ? grade_involution(arg) : arg;
  return geometric_product(geometric_product(v.value, mid), reverse(v.value));
}

}  // namespace gab
