// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hjhalf/pl_function.hpp"

namespace hjhalf {

/// Even majorant used as the denominator of the E equation: the symmetric
/// running supremum of h(s) = max((-F^-1)'(s), (-2F)^-1(s)). Non-decreasing
/// in |t|, >= h pointwise, and minimal among even monotone majorants.
class GEvaluator {
 public:
  double operator()(double t) const;

  struct SideProfile {
    std::vector<double> knots;   // ascending, knots[0] = 0
    std::vector<double> val0;    // piece value at its left knot
    std::vector<double> slope;   // piece slope (0 for constant pieces)
    std::vector<double> prefix;  // sup of h over [0, knots[i]] incl. jumps
    double eval(double r) const;
  };

  SideProfile pos;  // sup over [0, r]
  SideProfile neg;  // sup over [-r, 0]
};

/// Requires F strictly decreasing with F(0) = 0 and both tails negative.
/// Throws NotStrictlyDecreasingError otherwise.
GEvaluator build_G(const PLFunction& F);

/// E and E' tabulated on the uniform grid t = (i - n_half) * dt, built by
/// fixed-step RK4 on E' = 1/G(-2F(E)), E(0) = 0, integrating forward and
/// backward from zero. E is strictly increasing; Ep stores the right-hand
/// side at each node.
struct ETables {
  double dt = 0.0;
  double t_max = 0.0;
  std::size_t n_half = 0;  // node count is 2*n_half + 1
  std::vector<double> E;
  std::vector<double> Ep;

  double t_at(std::size_t i) const {
    return (static_cast<double>(i) - static_cast<double>(n_half)) * dt;
  }
  double E_at(double t) const;   // linear interpolation, clamped to the grid
  double Ep_at(double t) const;
};

/// Throws StepTooLargeError when the tabulated E fails strict monotonicity.
ETables solve_E(const PLFunction& F, const GEvaluator& G, double t_max, double dt);

/// f' = -F(E(t)), f(0) = 0, by trapezoid integration outward from zero.
/// Convex on the grid since f' is non-decreasing.
std::vector<double> build_f(const ETables& etab, const PLFunction& F);

/// psi(t, x) = F^-1(F(E(t)) - x E'(t)) - E(t), evaluated with
/// inverse_monotone and interpolated E, E'.
double psi(const PLFunction& F, const ETables& etab, double t, double x);

/// Uniform grid on [-R, R] with an odd node count so x = 0 is a node.
struct XGrid {
  double R = 50.0;
  std::size_t n = 2001;
  double x_at(std::size_t j) const {
    return -R + 2.0 * R * static_cast<double>(j) / static_cast<double>(n - 1);
  }
  std::size_t center() const { return (n - 1) / 2; }
};

/// Envelope tables: psi1(x) = sup over t of psi (kept for x >= 0), psi2 =
/// inf over t (kept for x <= 0). The sup/inf run over a strided subset of
/// the t grid; beyond t_max the bound |psi| <= |x| holds once the tail
/// certificate R*E'(T) <= min(1, |F(E(T))|) passes at both grid ends, and
/// that region is dominated by the 2x term of the g construction.
struct PsiTables {
  XGrid grid;
  std::vector<double> psi1;
  std::vector<double> psi2;
};

struct EnvelopeParams {
  double dense_window = 20.0;  ///< every stride_near-th node within |t| <= window
  std::size_t stride_near = 4;
  std::size_t stride_far = 200;
};

/// Throws TailBoundUnverifiedError when the certificate fails at either end.
PsiTables psi_envelopes(const PLFunction& F, const ETables& etab, const XGrid& grid,
                        const EnvelopeParams& params = {});

/// g'(x) = (1+margin) * max(2x, psi1) for x >= 0, (1+margin) * min(2x, psi2)
/// for x <= 0, with g'(0) = 0 pinned; g by trapezoid integration from zero.
struct GTables {
  std::vector<double> g;
  std::vector<double> gprime;
};
GTables build_g(const PsiTables& env, double margin);

/// Tabulated coupling test function phi(t, x) = f(t) + g(x) + x E(t) with
/// partials phi_t = -F(E) + x E', phi_x = g' + E.
struct TestFunctionTables {
  ETables etab;
  std::vector<double> f;
  XGrid xg;
  std::vector<double> g;
  std::vector<double> gprime;
  PLFunction F;
  double margin = 0.05;

  double f_at(double t) const;
  double g_at(double x) const;
  double gp_at(double x) const;
  double phi(double t, double x) const;
  double phi_t(double t, double x) const;
  double phi_x(double t, double x) const;
};

TestFunctionTables assemble_phi(ETables etab, std::vector<double> f, PsiTables env,
                                GTables gt, PLFunction F, double margin);

struct SampleSpec {
  double t_half = 8.0;
  double x_half = 8.0;
  std::size_t nt = 101;
  std::size_t nx = 101;
  double exclusion_radius = 1e-3;
  std::vector<double> ray_radii = {1.0, 2.0, 4.0, 8.0};
  std::size_t n_rays = 16;
  double sign_tol = 1e-9;
};

struct VerifyReport {
  bool passed = false;
  bool sign_ok = false;
  bool positivity_ok = false;
  bool superlinearity_ok = false;
  double worst_sign_margin = 0.0;    // max over x>=0 of phi_t + F(phi_x); must be <= tol
  double worst_sign_margin_neg = 0.0;  // min over x<=0 of the same; must be >= -tol
  double min_phi = 0.0;              // over samples outside the exclusion ball
  double worst_superlin_gap = 0.0;   // min of phi - (f - E^2/2 + x^2/2)
  std::vector<std::string> offenders;
  std::string to_text() const;
};

/// Checks the three defining properties on a sample grid plus rays:
/// (a) sign of phi_t + F(phi_x) on each side of x = 0, (b) positivity away
/// from the origin, (c) the superlinearity proxy bound and growth of
/// phi/|(t,x)| along rays.
VerifyReport verify_phi(const TestFunctionTables& tables, const SampleSpec& spec);

/// Throws VerificationFailedError carrying the offending samples.
void require_verified(const TestFunctionTables& tables, const SampleSpec& spec);

struct TestFnParams {
  double dt = 1e-3;
  double t_max = 100.0;  ///< auto-doubled until the tail certificate passes
  double R = 50.0;
  std::size_t nx = 2001;
  double margin = 0.05;
  EnvelopeParams envelope;
  SampleSpec samples;
  int max_tmax_doublings = 6;
};

struct BuiltTestFunction {
  TestFunctionTables tables;
  VerifyReport report;
  double t_max_used = 0.0;
  int refine_retries = 0;
};

/// Full pipeline: G, E (growing t_max until the tail certificate holds),
/// f, envelopes, g, assembly, verification. On a failed verification the
/// x grid is refined and the margin doubled once before giving up.
BuiltTestFunction build_test_function(const PLFunction& F, const TestFnParams& params = {});

}  // namespace hjhalf
