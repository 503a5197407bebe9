#pragma once

#include <optional>

#include "bisa/core.hpp"

namespace bisa {

// Quasi-static moment balance across the chamber interfaces of one finger.
// All moments in N·m. residual_nm reports the raw (unclamped) balance minus
// the clamped external moment, so it is negative exactly when the restoring
// moment dominates and the stack has not yet engaged (pre-contact).
struct MomentBalance {
  double pressure_moment_nm;   // M_p, per chamber
  double contact_moment_nm;    // M_c, per chamber interface
  double restoring_moment_nm;  // M_w, elastic restoring per interface
  double external_moment_nm;   // M_f the stack can withstand (clamped >= 0)
  int chamber_count;           // n
  double residual_nm;          // 2(n-1)M_p + (n-1)M_c - 2(n-1)M_w - M_f
  bool pre_contact;            // true when the raw balance is negative
};

// M_p = 4*P*a*b^2 with a the chamber half-width and b the half-height:
// inflating one chamber pushes on a 4ab face through a lever arm of b.
double pressure_moment(const ChamberStack& stack, double pressure_pa);

// M_c = P * S_contact with S_contact the effective first moment (m^3) of
// the chamber-wall contact patch about the hinge line.
double contact_moment(const ChamberStack& stack, double pressure_pa);

MomentBalance moment_balance(const ChamberStack& stack, double pressure_pa);

// The clamped external moment the pressurized stack holds:
// max(0, 2(n-1)*M_p + (n-1)*M_c - 2(n-1)*M_w).
double withstand_moment(const ChamberStack& stack, double pressure_pa);

enum class Regime {
  kTendonTaut,             // external < tendon critical moment
  kQuasistaticDeflection,  // critical <= external <= withstand
  kOverload,               // external > withstand
};

const char* regime_name(Regime regime);

// Both boundaries are closed toward quasistatic-deflection: external equal
// to the critical moment or to the withstand moment classifies there.
Regime classify_regime(double external_nm, const ChamberStack& stack, double pressure_pa);

// Ratio of withstand moments after/before a pressure increment. gain is
// empty when the base withstand is zero (undefined ratio); calibrated
// mirrors the stack's flag so downstream reports can mark uncalibrated
// estimates.
struct StiffnessGain {
  std::optional<double> gain;
  double base_withstand_nm;
  double raised_withstand_nm;
  bool calibrated;
};

StiffnessGain stiffness_gain(double base_pressure_pa, double pressure_increment_pa,
                             const ChamberStack& stack);

}  // namespace bisa
