#include "horo/chern.hpp"

#include "horo/errors.hpp"

namespace horo {

Rational ch2_bundle_side(const Integer& codim_base, const FiberSurfaceData& data) {
  if (!data.pullbacks_vanish)
    throw UnsupportedEvaluation(
        "projective-bundle evaluation needs base pullbacks to vanish on the surface");
  if (codim_base < 1) throw DomainError("fiber dimension must be positive");
  return make_rational(codim_base + 1, 2) * data.xi_sq;
}

Rational ch2_blowup_solve(const Rational& bundle_value, const Integer& codim_center,
                          const Integer& c1_x, const Integer& c1_center,
                          const FiberSurfaceData& data) {
  if (codim_center < 2)
    throw DomainError("blow-up center must have codimension >= 2, got " +
                      to_string(codim_center));
  // c1(N) = (c1(X) - c1(center)) H restricted to the center.
  const Rational normal_term = Rational(Integer(c1_x - c1_center) * data.h_dot_line);
  Rational result = bundle_value - make_rational(codim_center + 1, 2) * data.e_sq + normal_term;
  result.canonicalize();
  return result;
}

Ch2Report ch2_surfaces(const HorosphericalFamily& f) {
  const InvariantRecord inv = invariants(f);
  const auto data = FiberSurfaceData::canonical();

  // Blow up Y, fiber over Z.
  const Rational bundle_z = ch2_bundle_side(inv.codim_z, data);
  const Rational sz = ch2_blowup_solve(bundle_z, inv.codim_y, inv.c1_x, inv.c1_y, data);
  // Blow up Z, fiber over Y.
  const Rational bundle_y = ch2_bundle_side(inv.codim_y, data);
  const Rational sy = ch2_blowup_solve(bundle_y, inv.codim_z, inv.c1_x, inv.c1_z, data);

  Ch2Report r;
  r.ch2_dot_sy = sy;
  r.ch2_dot_sz = sz;
  r.two_fano = sgn(sy) > 0 && sgn(sz) > 0;
  switch (f.kind()) {
    case FamilyKind::X2:
      r.h4_generation_basis = "b4(X) = 1, so one positive surface class suffices";
      break;
    case FamilyKind::X3:
      r.h4_generation_basis = "the classes of S_Y and S_Z generate H4(X, Z)";
      break;
    default:
      r.h4_generation_basis = "ch2.S_Y < 0 already rules out positivity";
      break;
  }
  return r;
}

std::pair<Rational, Rational> ch2_closed_form(const HorosphericalFamily& f) {
  const Integer n = f.n();
  const Integer m = f.m();
  switch (f.kind()) {
    case FamilyKind::X1: return {make_rational(-3 * (n - 2), 2), make_rational(n, 2)};
    case FamilyKind::X2: return {make_rational(3, 2), make_rational(3, 2)};
    case FamilyKind::X3:
      return {make_rational(-2 * n - 2 + 3 * m, 2), make_rational(2 * n + 4 - 3 * m, 2)};
    case FamilyKind::X4:
    case FamilyKind::X5: return {Rational(-1), Rational(1)};
  }
  throw DomainError("unknown family");
}

CheckReport closed_form_check(const HorosphericalFamily& f) {
  return closed_form_check(f, ch2_closed_form(f));
}

CheckReport closed_form_check(const HorosphericalFamily& f,
                              const std::pair<Rational, Rational>& reference) {
  const Ch2Report derived = ch2_surfaces(f);
  CheckReport report;
  report.subject = f.descriptor();
  report.add("ch2_SY", to_string(derived.ch2_dot_sy), to_string(reference.first));
  report.add("ch2_SZ", to_string(derived.ch2_dot_sz), to_string(reference.second));
  return report;
}

}  // namespace horo
