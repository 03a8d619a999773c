#pragma once

namespace canon {

/// Speed c, force bound b and hbar; defaults are natural units.
struct PhysicalConstants {
  double c = 1.0;
  double b = 1.0;
  double hbar = 1.0;

  /// Throws unless c, b, hbar are finite and positive.
  void validate() const;

  double lambda_t() const;  // sqrt(hbar / (b c))
  double lambda_q() const;  // sqrt(hbar c / b)
  double lambda_p() const;  // sqrt(hbar b / c)
  double lambda_e() const;  // sqrt(hbar b c)
};

}  // namespace canon
