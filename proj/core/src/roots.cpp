#include "roots.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "fflambda/error.hpp"

namespace fflambda::detail {
namespace {

using cld = std::complex<long double>;

cld horner(const std::vector<long double>& c, cld z) {
  cld acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(const std::vector<long double>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<double>> out;
  if (d <= 0) return out;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -static_cast<double>(c[static_cast<std::size_t>(i)] / c.back());
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Error(Errc::RootFindingFailure, "companion eigenvalues did not converge");
  std::vector<long double> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<long double>(i));
  for (int i = 0; i < d; ++i) {
    cld z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int step = 0; step < 3; ++step) {
      const cld fz = horner(c, z);
      const cld dz = horner(dc, z);
      if (std::abs(dz) == 0.0L) break;
      const cld next = z - fz / dz;
      if (!(std::abs(horner(c, next)) < std::abs(fz))) break;
      z = next;
    }
    if (!std::isfinite(static_cast<double>(z.real())) || !std::isfinite(static_cast<double>(z.imag()))) {
      throw Error(Errc::RootFindingFailure, "Newton polish diverged");
    }
    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return out;
}


}  // namespace fflambda::detail
