#pragma once

// The deformed completed L-function and its De Bruijn-Newman constant.

#include <optional>
#include <string>
#include <vector>

#include "fflambda/lfunction.hpp"

namespace fflambda {

// Xi_t(x) = Phi_0 + sum_{n=1}^{g} Phi_n e^{t n^2} 2 cos(n x).
struct XiSeries {
  std::uint64_t q = 0;
  int g = 0;
  std::vector<double> phi;  // Phi_0 .. Phi_g

  static XiSeries from(const LData& L);
};

double xi_at(const XiSeries& xs, double t, double x);

// G_t(u), u = cos x, with G_t(cos x) = Xi_t(x); coefficients constant first.
std::vector<double> cos_poly(const XiSeries& xs, double t);

struct RealRootCheck {
  bool sturm = false;       // distinct roots in [-1-tol, 1+tol] == distinct roots
  bool companion = false;   // every eigenvalue real and inside [-1-tol, 1+tol]
  int sturm_in_interval = 0;
  int distinct_roots = 0;
};

// Both verdicts on real-rootedness of Xi_t, without reconciling them.
RealRootCheck real_root_check(const XiSeries& xs, double t, double tol_root = 1e-8);

// All zeros of Xi_t real. Throws IndeterminateNearBoundary when the Sturm
// count and the companion eigenvalues disagree.
bool is_real_rooted(const XiSeries& xs, double t, double tol_root = 1e-8);

// Exact: gcd(P, P') over Q has positive degree, P = sum c_n T^n.
bool has_double_root(const LData& L);

enum class LambdaStatus { ExactZero, Numeric, NegInfinity, FloorHit };
// "exact0", "numeric", "neginf", "floor".
const char* lambda_status_name(LambdaStatus s) noexcept;
LambdaStatus parse_lambda_status(const std::string& s);

struct LambdaOptions {
  double tol_t = 1e-8;
  double t_floor = -30.0;
  double tol_root = 1e-8;
  // Skip the genus-1 closed form and bisect instead.
  bool force_bisection = false;
};

struct LambdaResult {
  LambdaStatus status = LambdaStatus::Numeric;
  std::optional<double> value;
  std::optional<double> halfwidth;
  std::string witness;

  friend bool operator==(const LambdaResult&, const LambdaResult&) = default;
};

LambdaResult compute_lambda(const LData& L, const LambdaOptions& opts = {});

}  // namespace fflambda
