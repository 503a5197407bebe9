#pragma once

#include <numbers>

// Unit conventions: the library works in strict SI (m, N, Pa, rad, N*m).
// File formats and the CLI speak mm, N, kPa, deg and N*mm; conversions
// happen only at those boundaries.
namespace bisa::units {

inline constexpr double kGravity = 9.81;  // m/s^2, converts pulling masses to forces

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

inline constexpr double mm_to_m(double mm) { return mm * 1e-3; }
inline constexpr double m_to_mm(double m) { return m * 1e3; }

inline constexpr double mm3_to_m3(double mm3) { return mm3 * 1e-9; }
inline constexpr double m3_to_mm3(double m3) { return m3 * 1e9; }

inline constexpr double kpa_to_pa(double kpa) { return kpa * 1e3; }
inline constexpr double pa_to_kpa(double pa) { return pa * 1e-3; }

inline constexpr double mpa_to_pa(double mpa) { return mpa * 1e6; }
inline constexpr double pa_to_mpa(double pa) { return pa * 1e-6; }

inline constexpr double nmm_to_nm(double nmm) { return nmm * 1e-3; }
inline constexpr double nm_to_nmm(double nm) { return nm * 1e3; }

inline constexpr double n_per_m_to_n_per_mm(double k) { return k * 1e-3; }
inline constexpr double n_per_mm_to_n_per_m(double k) { return k * 1e3; }

inline constexpr double mass_to_force(double kg) { return kg * kGravity; }

}  // namespace bisa::units
