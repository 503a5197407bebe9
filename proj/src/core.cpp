#include "bisa/core.hpp"

#include <cmath>

namespace bisa {

using detail::require_finite;
using detail::require_non_negative;
using detail::require_positive;

Material::Material(double young_modulus_pa, double poisson_ratio)
    : young_modulus_(young_modulus_pa), poisson_ratio_(poisson_ratio) {
  require_positive(young_modulus_pa, "young_modulus");
  require_finite(poisson_ratio, "poisson_ratio");
  if (poisson_ratio < 0.0 || poisson_ratio >= 0.5) {
    throw DomainError("poisson_ratio must lie in [0, 0.5)");
  }
}

double shear_modulus(const Material& material) { return material.shear_modulus(); }

RectSection::RectSection(double width_m, double aspect_ratio)
    : width_(width_m), aspect_ratio_(aspect_ratio) {
  require_positive(width_m, "width");
  require_positive(aspect_ratio, "aspect_ratio");
  const double b2 = width_m * width_m;
  bending_inertia_ = aspect_ratio * b2 * b2 / 12.0;
  torsion_inertia_ = bending_inertia_ * (1.0 + aspect_ratio * aspect_ratio);
}

RectSection derive_section(double width_m, double aspect_ratio) {
  return RectSection(width_m, aspect_ratio);
}

BlsModel::BlsModel(Material material, RectSection section, double arc_length_m,
                   double structure_height_m, double segment_length_m,
                   int segment_count, double pretension_n)
    : material_(material),
      section_(section),
      arc_length_(arc_length_m),
      structure_height_(structure_height_m),
      segment_length_(segment_length_m),
      segment_count_(segment_count),
      pretension_(pretension_n) {
  require_positive(arc_length_m, "arc_length");
  require_positive(structure_height_m, "structure_height");
  require_positive(segment_length_m, "segment_length");
  if (segment_count < 2) {
    throw DomainError("segment_count must be at least 2");
  }
  require_non_negative(pretension_n, "pretension");
}

ChamberStack::ChamberStack(int chamber_count, double half_width_m,
                           double half_height_m, double contact_first_moment_m3,
                           double restoring_moment_nm,
                           double tendon_critical_moment_nm, bool calibrated)
    : chamber_count_(chamber_count),
      half_width_(half_width_m),
      half_height_(half_height_m),
      contact_first_moment_(contact_first_moment_m3),
      restoring_moment_(restoring_moment_nm),
      tendon_critical_moment_(tendon_critical_moment_nm),
      calibrated_(calibrated) {
  if (chamber_count < 2) {
    throw DomainError("chamber_count must be at least 2");
  }
  require_positive(half_width_m, "half_width");
  require_positive(half_height_m, "half_height");
  require_non_negative(contact_first_moment_m3, "contact_first_moment");
  require_non_negative(restoring_moment_nm, "restoring_moment");
  require_non_negative(tendon_critical_moment_nm, "tendon_critical_moment");
}

ArcState ArcState::from_angle(double angle_rad, double arc_length_m) {
  require_non_negative(angle_rad, "angle");
  require_positive(arc_length_m, "arc_length");
  if (angle_rad == 0.0) {
    return ArcState(0.0, 0.0);
  }
  return ArcState(angle_rad, arc_length_m / angle_rad);
}

double ArcState::radius() const {
  if (is_straight()) {
    throw DomainError("straight pose has no finite radius");
  }
  return radius_;
}

LoadCase::LoadCase(double external_force_n, double pressure_pa)
    : external_force_(external_force_n), pressure_(pressure_pa) {
  require_non_negative(external_force_n, "external_force");
  require_non_negative(pressure_pa, "pressure");
}

}  // namespace bisa
