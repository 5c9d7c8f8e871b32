#pragma once

#include <complex>
#include <string>

namespace qwalk {

using Amplitude = std::complex<double>;

/// Tolerance on every coin constraint (row norms, orthogonality, |det|, Konno relation).
inline constexpr double kCoinTolerance = 1e-12;

/// 2x2 unitary acting on the two-state coin, row-major:
///
///     | a  b |
///     | c  d |
///
/// The first row produces the rightward-moving component, the second the
/// leftward-moving one.
struct CoinOperator {
  Amplitude a{1.0};
  Amplitude b{0.0};
  Amplitude c{0.0};
  Amplitude d{1.0};

  Amplitude determinant() const { return a * d - b * c; }

  CoinOperator adjoint() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }

  // Matrix product; (lhs * rhs) applies rhs first.
  friend CoinOperator operator*(const CoinOperator& lhs, const CoinOperator& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
  }

  friend CoinOperator operator*(Amplitude s, const CoinOperator& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
  }
};

/// Coin amplitudes (alpha, beta) at the starting site.
struct InitialCoinState {
  Amplitude alpha{1.0};
  Amplitude beta{0.0};

  double norm_squared() const { return std::norm(alpha) + std::norm(beta); }
};

/// Result of checking a matrix against the unitarity constraints of the
/// coin family. Each field holds the absolute violation of one constraint.
struct CoinCheck {
  bool valid = false;
  double row_norm_error = 0.0;      // max(||a|^2+|b|^2-1|, ||c|^2+|d|^2-1|)
  double orthogonality_error = 0.0; // |a c* + b d*|
  double determinant_error = 0.0;   // ||ad-bc| - 1|
  double relation_error = 0.0;      // max(|c + Delta b*|, |d - Delta a*|)

  /// Human-readable list of the violated constraints, empty when valid.
  std::string describe() const;
};

CoinCheck validate_coin(const CoinOperator& coin);

/// (1/sqrt2) [[1, 1], [1, -1]]
CoinOperator make_hadamard();

/// Builds U = [[a, b], [-Delta b*, Delta a*]]. Throws std::invalid_argument
/// unless |a|^2+|b|^2 = 1 and |Delta| = 1 within kCoinTolerance.
CoinOperator make_konno_coin(Amplitude a, Amplitude b, Amplitude delta);

/// [[cos d, -i sin d], [-i sin d, cos d]]; throws on non-finite delta.
CoinOperator make_galton_coin(double delta);

/// Throws std::invalid_argument when |alpha|^2+|beta|^2 deviates from 1.
void require_normalized(const InitialCoinState& init);

}  // namespace qwalk
