#include "bisa/bending.hpp"

#include <algorithm>

#include "bisa/errors.hpp"

namespace bisa {

double pressure_moment(const ChamberStack& stack, double pressure_pa) {
  detail::require_non_negative(pressure_pa, "pressure");
  const double a = stack.half_width();
  const double b = stack.half_height();
  return 4.0 * pressure_pa * a * b * b;
}

double contact_moment(const ChamberStack& stack, double pressure_pa) {
  detail::require_non_negative(pressure_pa, "pressure");
  return pressure_pa * stack.contact_first_moment();
}

MomentBalance moment_balance(const ChamberStack& stack, double pressure_pa) {
  const double m_p = pressure_moment(stack, pressure_pa);
  const double m_c = contact_moment(stack, pressure_pa);
  const double m_w = stack.restoring_moment();
  const double pairs = static_cast<double>(stack.chamber_count() - 1);
  const double raw = 2.0 * pairs * m_p + pairs * m_c - 2.0 * pairs * m_w;
  const double clamped = std::max(raw, 0.0);
  return MomentBalance{m_p,     m_c,
                       m_w,     clamped,
                       stack.chamber_count(),
                       raw - clamped,  // 0 when engaged, raw when pre-contact
                       raw < 0.0};
}

double withstand_moment(const ChamberStack& stack, double pressure_pa) {
  return moment_balance(stack, pressure_pa).external_moment_nm;
}

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::kTendonTaut:
      return "tendon-taut";
    case Regime::kQuasistaticDeflection:
      return "quasistatic-deflection";
    case Regime::kOverload:
      return "overload";
  }
  return "unknown";
}

Regime classify_regime(double external_nm, const ChamberStack& stack,
                       double pressure_pa) {
  detail::require_non_negative(external_nm, "external moment");
  if (external_nm < stack.tendon_critical_moment()) {
    return Regime::kTendonTaut;
  }
  if (external_nm <= withstand_moment(stack, pressure_pa)) {
    return Regime::kQuasistaticDeflection;
  }
  return Regime::kOverload;
}

StiffnessGain stiffness_gain(double base_pressure_pa, double pressure_increment_pa,
                             const ChamberStack& stack) {
  detail::require_positive(base_pressure_pa, "base pressure");
  detail::require_non_negative(pressure_increment_pa, "pressure increment");
  const double base = withstand_moment(stack, base_pressure_pa);
  const double raised = withstand_moment(stack, base_pressure_pa + pressure_increment_pa);
  StiffnessGain result{std::nullopt, base, raised, stack.calibrated()};
  if (base > 0.0) {
    result.gain = raised / base;
  }
  return result;
}

}  // namespace bisa
