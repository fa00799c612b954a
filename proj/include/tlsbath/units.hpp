#pragma once

// Internal unit system: time in us, angular rates in rad/us, lengths in nm,
// dipole moments in Debye, fields in V/m. Ordinary frequencies (MHz/GHz)
// only appear at I/O boundaries.

#include <numbers>
#include <string_view>

namespace tlsbath {

namespace constants {
inline constexpr double kHbar = 1.05457e-34;     // J s
inline constexpr double kDebye = 3.33564e-30;    // C m
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace constants

/// Angular rate in rad/us. Decay rates and angular frequencies share this type.
struct AngularRate {
  double value = 0.0;

  constexpr AngularRate() = default;
  constexpr explicit AngularRate(double v) : value(v) {}

  /// Ordinary frequency equivalent, in MHz.
  constexpr double mhz() const { return value / constants::kTwoPi; }

  friend constexpr AngularRate operator+(AngularRate a, AngularRate b) { return AngularRate(a.value + b.value); }
  friend constexpr AngularRate operator-(AngularRate a, AngularRate b) { return AngularRate(a.value - b.value); }
  friend constexpr AngularRate operator*(double k, AngularRate a) { return AngularRate(k * a.value); }
  friend constexpr auto operator<=>(const AngularRate&, const AngularRate&) = default;
};

/// Dipole moment in Debye.
struct DipoleMoment {
  double value = 0.0;
  constexpr DipoleMoment() = default;
  constexpr explicit DipoleMoment(double debye) : value(debye) {}
  friend constexpr auto operator<=>(const DipoleMoment&, const DipoleMoment&) = default;
};

/// Electric-field magnitude in V/m.
struct ElectricField {
  double magnitude = 0.0;
  constexpr ElectricField() = default;
  constexpr explicit ElectricField(double v_per_m) : magnitude(v_per_m) {}
  friend constexpr auto operator<=>(const ElectricField&, const ElectricField&) = default;
};

enum class RateUnit { GHz, MHz, kHz, PerNs, PerUs, RadPerUs };

/// Parses "GHz", "MHz", "kHz", "1/ns", "1/us" (or "1/μs"), "rad/us".
/// Unknown tags throw ConfigError.
RateUnit parse_rate_unit(std::string_view tag);

/// Frequency units are multiplied by 2*pi; inverse-time units pass through.
AngularRate to_internal(double value, RateUnit unit);
double from_internal(AngularRate rate, RateUnit unit);

/// Ordinary frequency in GHz to angular rad/us.
constexpr AngularRate ghz(double f) { return AngularRate(constants::kTwoPi * 1e3 * f); }
constexpr AngularRate mhz(double f) { return AngularRate(constants::kTwoPi * f); }
constexpr AngularRate per_us(double r) { return AngularRate(r); }

/// Coupling g = p E / hbar as an angular rate.
AngularRate dipole_coupling(DipoleMoment p, ElectricField e);

/// Field magnitude that yields coupling g for dipole p (inverse of dipole_coupling).
ElectricField field_for_coupling(AngularRate g, DipoleMoment p);

/// T1 = Q / omega, in us. Nonpositive inputs throw DomainError.
double q_to_t1(double quality_factor, AngularRate omega);

}  // namespace tlsbath
