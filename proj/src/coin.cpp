#include "qwalk/coin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qwalk {

std::string CoinCheck::describe() const {
  std::ostringstream out;
  out.precision(3);
  auto report = [&](const char* what, double error) {
    if (error > kCoinTolerance) {
      if (out.tellp() > 0) out << "; ";
      out << what << " violated by " << std::scientific << error;
    }
  };
  report("unit row norm", row_norm_error);
  report("row orthogonality", orthogonality_error);
  report("unit determinant modulus", determinant_error);
  report("c = -Delta b*, d = Delta a*", relation_error);
  return out.str();
}

CoinCheck validate_coin(const CoinOperator& u) {
  CoinCheck check;
  check.row_norm_error = std::max(std::abs(std::norm(u.a) + std::norm(u.b) - 1.0),
                                  std::abs(std::norm(u.c) + std::norm(u.d) - 1.0));
  check.orthogonality_error = std::abs(u.a * std::conj(u.c) + u.b * std::conj(u.d));
  const Amplitude delta = u.determinant();
  check.determinant_error = std::abs(std::abs(delta) - 1.0);
  check.relation_error = std::max(std::abs(u.c + delta * std::conj(u.b)),
                                  std::abs(u.d - delta * std::conj(u.a)));

  const double worst = std::max({check.row_norm_error, check.orthogonality_error,
                                 check.determinant_error, check.relation_error});
  check.valid = std::isfinite(worst) && worst <= kCoinTolerance;
  return check;
}

CoinOperator make_hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s, s, -s};
}

CoinOperator make_konno_coin(Amplitude a, Amplitude b, Amplitude delta) {
  const double row = std::norm(a) + std::norm(b);
  if (!std::isfinite(row) || std::abs(row - 1.0) > kCoinTolerance) {
    std::ostringstream msg;
    msg << "invalid coin parameters: |a|^2+|b|^2 = " << row << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
  if (!std::isfinite(std::abs(delta)) || std::abs(std::abs(delta) - 1.0) > kCoinTolerance) {
    std::ostringstream msg;
    msg << "invalid coin parameters: |Delta| = " << std::abs(delta) << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
  return {a, b, -delta * std::conj(b), delta * std::conj(a)};
}

CoinOperator make_galton_coin(double delta) {
  if (!std::isfinite(delta)) throw std::invalid_argument("galton coin angle must be finite");
  const Amplitude cos_d{std::cos(delta), 0.0};
  const Amplitude mis{0.0, -std::sin(delta)};
  return {cos_d, mis, mis, cos_d};
}

void require_normalized(const InitialCoinState& init) {
  const double n = init.norm_squared();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kCoinTolerance) {
    std::ostringstream msg;
    msg << "initial coin state must satisfy |alpha|^2+|beta|^2 = 1, got " << n;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace qwalk
