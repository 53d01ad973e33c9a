#include "gab/cga.hpp"

#include <cmath>

namespace gab {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Point: return "point";
    case Kind::FlatPoint: return "flat-point";
    case Kind::Line: return "line";
    case Kind::Plane: return "plane";
    case Kind::Sphere: return "sphere";
    case Kind::Circle: return "circle";
  }
  return "?";
}

std::string to_string(Rep r) {
  switch (r) {
    case Rep::OpnsCga: return "OPNS-CGA";
    case Rep::IpnsCga: return "IPNS-CGA";
    case Rep::Pga: return "PGA";
  }
  return "?";
}

}  // namespace gab

namespace gab::cga {

namespace {

void require_cga(const SignaturePtr& sig, const char* op) {
  if (sig->model() != Model::Cga)
    throw ga_error(std::string(op) + " requires a conformal signature");
}

void require_euclidean_vector(const Multivector& p, const char* what) {
  require_cga(p.signature(), what);
  if (!is_euclidean_vector(p))
    throw ga_error(std::string(what) + ": input is not a Euclidean grade-1 vector");
}

double span_scale(std::initializer_list<const Multivector*> inputs) {
  double s = 1.0;
  for (const Multivector* m : inputs) s *= std::max(1.0, m->max_abs_coeff());
  return s;
}

}  // namespace

bool is_euclidean_vector(const Multivector& p) {
  if (p.signature()->model() != Model::Cga) return false;
  const uint32_t e0bit = 1u;
  const uint32_t nibit = uint32_t{1} << p.signature()->ninf_index();
  for (const auto& [bits, c] : p.terms())
    if ((bits & (e0bit | nibit)) || grade_of(bits) != 1) return false;
  return true;
}

Multivector origin(const SignaturePtr& sig) {
  require_cga(sig, "origin");
  return Multivector::generator(sig, sig->e0_index());
}

Multivector infinity(const SignaturePtr& sig) {
  require_cga(sig, "infinity");
  return Multivector::generator(sig, sig->ninf_index());
}

Multivector pseudoscalar(const SignaturePtr& sig) {
  require_cga(sig, "pseudoscalar");
  return Multivector::blade(sig, sig->pseudoscalar_blade());
}

Multivector pseudoscalar_inverse(const SignaturePtr& sig) {
  require_cga(sig, "pseudoscalar");
  const int n = sig->dim();
  const double sign = ((n * (n - 1) / 2) & 1) ? -1.0 : 1.0;
  return Multivector::blade(sig, sig->pseudoscalar_blade(), sign);
}

Multivector up(const Multivector& p) {
  require_euclidean_vector(p, "up");
  const auto& sig = p.signature();
  const double norm2 = scalar_product(p, p);
  return origin(sig) + p + infinity(sig) * (0.5 * norm2);
}

Multivector down(const Multivector& point) {
  require_cga(point.signature(), "down");
  const auto& sig = point.signature();
  if (point.top_grade() > 1) throw ga_error("down: input is not grade 1");
  const double scale = std::max(1.0, point.max_abs_coeff());
  const double weight = -scalar_product(point, infinity(sig));
  if (std::fabs(weight) <= 1e-12 * scale)
    throw ga_error("down: point at infinity (P . ni = 0)");
  if (std::fabs(scalar_product(point, point)) > 1e-9 * scale * scale)
    throw ga_error("down: input is not null");
  Multivector out(sig);
  const uint32_t e0bit = 1u;
  const uint32_t nibit = uint32_t{1} << sig->ninf_index();
  for (const auto& [bits, c] : point.terms())
    if (!(bits & (e0bit | nibit))) out.add_term(bits, c / weight);
  return out;
}

Multivector dual(const Multivector& a) {
  require_cga(a.signature(), "dual");
  return left_contraction(a, pseudoscalar_inverse(a.signature()));
}

GeometricEntity flat_point(const Multivector& point) {
  require_cga(point.signature(), "flat_point");
  Multivector v = outer_product(point, infinity(point.signature()));
  if (v.is_zero(1e-12 * span_scale({&point})))
    throw ga_error("flat_point: degenerate span");
  return GeometricEntity{Kind::FlatPoint, Rep::OpnsCga, std::move(v)};
}

GeometricEntity line(const Multivector& p1, const Multivector& p2) {
  require_cga(p1.signature(), "line");
  Multivector v = outer_product(outer_product(p1, p2), infinity(p1.signature()));
  if (v.is_zero(1e-12 * span_scale({&p1, &p2})))
    throw ga_error("line: degenerate span");
  return GeometricEntity{Kind::Line, Rep::OpnsCga, std::move(v)};
}

GeometricEntity plane(const Multivector& p1, const Multivector& p2,
                      const Multivector& p3) {
  require_cga(p1.signature(), "plane");
  Multivector v = outer_product(outer_product(outer_product(p1, p2), p3),
                                infinity(p1.signature()));
  if (v.is_zero(1e-12 * span_scale({&p1, &p2, &p3})))
    throw ga_error("plane: degenerate span");
  return GeometricEntity{Kind::Plane, Rep::OpnsCga, std::move(v)};
}

GeometricEntity sphere_dual(const Multivector& center, double radius) {
  require_euclidean_vector(center, "sphere_dual");
  if (radius < 0.0) throw ga_error("sphere_dual: negative radius");
  Multivector v = up(center) - infinity(center.signature()) * (0.5 * radius * radius);
  return GeometricEntity{radius == 0.0 ? Kind::Point : Kind::Sphere, Rep::IpnsCga,
                         std::move(v)};
}

bool opns_contains(const Multivector& point, const GeometricEntity& a) {
  if (a.rep != Rep::OpnsCga)
    throw ga_error("opns_contains: entity is not a direct (OPNS) representation");
  require_cga(point.signature(), "opns_contains");
  const Multivector r = outer_product(point, a.value);
  return r.is_zero(1e-9 * span_scale({&point, &a.value}));
}

bool ipns_contains(const Multivector& point, const GeometricEntity& a) {
  if (a.rep != Rep::IpnsCga)
    throw ga_error("ipns_contains: entity is not a dual (IPNS) representation");
  require_cga(point.signature(), "ipns_contains");
  const Multivector r = left_contraction(point, a.value);
  return r.is_zero(1e-9 * span_scale({&point, &a.value}));
}

Versor translator(const Multivector& t) {
  require_euclidean_vector(t, "translator");
  const auto& sig = t.signature();
  const Multivector v =
      Multivector::scalar(sig, 1.0) - geometric_product(t, infinity(sig)) * 0.5;
  return Versor{v, false};
}

Versor rotor(const Multivector& axis_dual, double angle) {
  require_cga(axis_dual.signature(), "rotor");
  const auto& sig = axis_dual.signature();
  const Multivector sq = geometric_product(axis_dual, axis_dual);
  if (!(sq + Multivector::scalar(sig, 1.0)).is_zero(1e-9))
    throw ga_error("rotor: axis_dual is not normalized (axis^2 != -1)");
  const Multivector v = Multivector::scalar(sig, std::cos(angle / 2)) +
                        axis_dual * std::sin(angle / 2);
  return Versor{v, false};
}

}  // namespace gab::cga
