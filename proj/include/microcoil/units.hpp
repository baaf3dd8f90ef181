#pragma once

// Strongly typed physical quantities. Every kind stores a single SI value;
// micrometers, millimeters and milliamperes only appear at the I/O boundary
// through the named factories and accessors below.

#include <compare>
#include <cmath>

namespace microcoil {

template <class Tag>
class Quantity {
 public:
  constexpr Quantity() = default;
  constexpr explicit Quantity(double value) : value_(value) {}

  constexpr double si() const { return value_; }

  constexpr Quantity operator-() const { return Quantity(-value_); }
  constexpr Quantity& operator+=(Quantity other) {
    value_ += other.value_;
    return *this;
  }
  constexpr Quantity& operator-=(Quantity other) {
    value_ -= other.value_;
    return *this;
  }
  constexpr Quantity& operator*=(double k) {
    value_ *= k;
    return *this;
  }

  friend constexpr Quantity operator+(Quantity a, Quantity b) {
    return Quantity(a.value_ + b.value_);
  }
  friend constexpr Quantity operator-(Quantity a, Quantity b) {
    return Quantity(a.value_ - b.value_);
  }
  friend constexpr Quantity operator*(Quantity a, double k) {
    return Quantity(a.value_ * k);
  }
  friend constexpr Quantity operator*(double k, Quantity a) {
    return Quantity(a.value_ * k);
  }
  friend constexpr Quantity operator/(Quantity a, double k) {
    return Quantity(a.value_ / k);
  }
  // Same-kind ratio is dimensionless.
  friend constexpr double operator/(Quantity a, Quantity b) {
    return a.value_ / b.value_;
  }
  friend constexpr auto operator<=>(Quantity a, Quantity b) = default;

 private:
  double value_ = 0.0;
};

struct LengthTag {};
struct CurrentTag {};
struct CurrentDensityTag {};
struct MagneticFieldTag {};
struct PowerTag {};
struct ResistanceTag {};
struct ResistivityTag {};
struct AreaTag {};

using Length = Quantity<LengthTag>;                  // m
using Current = Quantity<CurrentTag>;                // A
using CurrentDensity = Quantity<CurrentDensityTag>;  // A/m^2
using MagneticFieldH = Quantity<MagneticFieldTag>;   // A/m
using Power = Quantity<PowerTag>;                    // W
using Resistance = Quantity<ResistanceTag>;          // Ohm
using Resistivity = Quantity<ResistivityTag>;        // Ohm m
using Area = Quantity<AreaTag>;                      // m^2

constexpr Length Meters(double v) { return Length(v); }
constexpr Length Millimeters(double v) { return Length(v * 1e-3); }
constexpr Length Micrometers(double v) { return Length(v * 1e-6); }
constexpr Current Amperes(double v) { return Current(v); }
constexpr Current Milliamperes(double v) { return Current(v * 1e-3); }
constexpr CurrentDensity AmperesPerSquareMeter(double v) {
  return CurrentDensity(v);
}
// 1 mA/um^2 = 1e-3 A / 1e-12 m^2.
constexpr CurrentDensity MilliamperesPerSquareMicrometer(double v) {
  return CurrentDensity(v * 1e9);
}
constexpr MagneticFieldH AmperesPerMeter(double v) { return MagneticFieldH(v); }
constexpr Resistivity OhmMeters(double v) { return Resistivity(v); }

constexpr double InMicrometers(Length l) { return l.si() * 1e6; }
constexpr double InMillimeters(Length l) { return l.si() * 1e3; }
constexpr double InMilliamperes(Current i) { return i.si() * 1e3; }

// Cross-kind products used by the drive model.
constexpr Area operator*(Length a, Length b) { return Area(a.si() * b.si()); }
constexpr Current operator*(CurrentDensity j, Area s) {
  return Current(j.si() * s.si());
}

}  // namespace microcoil
