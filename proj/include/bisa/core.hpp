#pragma once

#include "bisa/errors.hpp"

namespace bisa {

// Linear-elastic isotropic material. The shear modulus is always derived
// from E and nu, never stored separately.
class Material {
 public:
  Material(double young_modulus_pa, double poisson_ratio);

  double young_modulus() const { return young_modulus_; }   // Pa
  double poisson_ratio() const { return poisson_ratio_; }
  double shear_modulus() const {                            // Pa
    return young_modulus_ / (2.0 * (1.0 + poisson_ratio_));
  }

 private:
  double young_modulus_;
  double poisson_ratio_;
};

double shear_modulus(const Material& material);

// Rectangular beam cross-section of width b and height lambda*b.
// The torsion inertia uses the polar-moment form I*(1+lambda^2); the true
// rectangular torsion constant is smaller, but the closed-form stiffness
// below is built on the polar approximation and the two must stay paired.
class RectSection {
 public:
  RectSection(double width_m, double aspect_ratio);

  double width() const { return width_; }                   // b, m
  double aspect_ratio() const { return aspect_ratio_; }     // lambda = height/width
  double height() const { return aspect_ratio_ * width_; }  // m
  double bending_inertia() const { return bending_inertia_; }  // I = lambda*b^4/12, m^4
  double torsion_inertia() const { return torsion_inertia_; }  // I_p = I*(1+lambda^2), m^4

 private:
  double width_;
  double aspect_ratio_;
  double bending_inertia_;
  double torsion_inertia_;
};

RectSection derive_section(double width_m, double aspect_ratio);

// One bone-like structure: a tendon-threaded chain of rigid segments that
// behaves as a continuous curved beam while the pretension holds.
class BlsModel {
 public:
  BlsModel(Material material, RectSection section, double arc_length_m,
           double structure_height_m, double segment_length_m,
           int segment_count, double pretension_n);

  const Material& material() const { return material_; }
  const RectSection& section() const { return section_; }
  double arc_length() const { return arc_length_; }              // C, m
  double structure_height() const { return structure_height_; }  // h, m
  double segment_length() const { return segment_length_; }      // L, m
  int segment_count() const { return segment_count_; }
  double pretension() const { return pretension_; }              // F_t, N

 private:
  Material material_;
  RectSection section_;
  double arc_length_;
  double structure_height_;
  double segment_length_;
  int segment_count_;
  double pretension_;
};

// Pneumatic chamber stack geometry for the air-tendon bending model.
// contact_first_moment is the effective first moment of the chamber-wall
// contact patch (area times lever arm, m^3): multiplying it by pressure
// yields the contact moment directly. It is a calibration input.
// `calibrated` records whether the stack parameters came from a data fit.
class ChamberStack {
 public:
  ChamberStack(int chamber_count, double half_width_m, double half_height_m,
               double contact_first_moment_m3, double restoring_moment_nm,
               double tendon_critical_moment_nm, bool calibrated = false);

  int chamber_count() const { return chamber_count_; }
  double half_width() const { return half_width_; }    // a, m
  double half_height() const { return half_height_; }  // b, m
  double contact_first_moment() const { return contact_first_moment_; }      // m^3
  double restoring_moment() const { return restoring_moment_; }              // M_w, N*m
  double tendon_critical_moment() const { return tendon_critical_moment_; }  // M_CR, N*m
  bool calibrated() const { return calibrated_; }

 private:
  int chamber_count_;
  double half_width_;
  double half_height_;
  double contact_first_moment_;
  double restoring_moment_;
  double tendon_critical_moment_;
  bool calibrated_;
};

// Constant-curvature pose: bending angle and the radius that keeps the
// arc length fixed. A straight pose (angle 0) has no finite radius;
// radius() refuses it.
class ArcState {
 public:
  static ArcState from_angle(double angle_rad, double arc_length_m);

  double angle() const { return angle_; }
  bool is_straight() const { return angle_ == 0.0; }
  double radius() const;  // m

 private:
  ArcState(double angle_rad, double radius_m) : angle_(angle_rad), radius_(radius_m) {}
  double angle_;
  double radius_;
};

// External side load and chamber pressure applied to the actuator.
class LoadCase {
 public:
  LoadCase(double external_force_n, double pressure_pa);

  double external_force() const { return external_force_; }  // N
  double pressure() const { return pressure_; }               // Pa

 private:
  double external_force_;
  double pressure_;
};

}  // namespace bisa
