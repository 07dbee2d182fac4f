// SPDX-License-Identifier: Apache-2.0
#include "hjhalf/limiter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hjhalf/constants.hpp"
#include "hjhalf/errors.hpp"

namespace hjhalf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// rightmost q < p with H(q) >= level, entered only when H < level just left of p
double scan_left_for_level(const PLFunction& h, double p, double level) {
  const auto& bps = h.breakpoints();
  double right_p = p;
  // last breakpoint strictly left of p
  long k = -1;
  for (long i = static_cast<long>(bps.size()) - 1; i >= 0; --i) {
    if (bps[i].p < p) {
      k = i;
      break;
    }
  }
  double right_v = h(right_p);
  for (; k >= 0; --k) {
    const double a = bps[k].p;
    const double va = bps[k].value;
    if (va >= level) {
      const double s = (right_v - va) / (right_p - a);
      if (s == 0.0 || va == level) return a;
      return a + (level - va) / s;
    }
    right_p = a;
    right_v = va;
  }
  // left tail: H climbs to +inf leftward (coercive)
  return bps.front().p + (level - bps.front().value) / h.left_tail_slope();
}

// leftmost q > p with H(q) <= level, entered only when H > level just right
// of p; +inf when no such q exists
double scan_right_for_level(const PLFunction& h, double p, double level) {
  const auto& bps = h.breakpoints();
  double left_p = p;
  double left_v = h(left_p);
  std::size_t k = 0;
  while (k < bps.size() && bps[k].p <= p) ++k;
  for (; k < bps.size(); ++k) {
    const double b = bps[k].p;
    const double vb = bps[k].value;
    if (vb <= level) {
      const double s = (vb - left_v) / (b - left_p);
      if (s == 0.0 || vb == level) return b;
      return b + (level - vb) / s;
    }
    left_p = b;
    left_v = vb;
  }
  const double rs = h.right_tail_slope();
  const double vn = bps.back().value;
  if (rs < 0.0) return bps.back().p + (level - vn) / rs;
  return kInf;  // rs >= 0 and H stays above the level
}

// open-interval intersection with a positive-width requirement
bool intervals_meet(double lo1, double hi1, double lo2, double hi2) {
  return std::max(lo1, lo2) + kTight < std::min(hi1, hi2);
}

bool plateau_equal(const LimiterPoint& a, const LimiterPoint& b) {
  if (std::isinf(a.p_plus) != std::isinf(b.p_plus)) return false;
  if (std::abs(a.p_minus - b.p_minus) > kTol) return false;
  if (!std::isinf(a.p_plus) && std::abs(a.p_plus - b.p_plus) > kTol) return false;
  return true;
}

}  // namespace

SlopeBounds slope_bounds(const PLFunction& hamiltonian, double p) {
  if (!check_coercive(hamiltonian))
    throw NotCoerciveError("slope_bounds: H must be coercive");
  const double level = hamiltonian(p);
  SlopeBounds out{p, p};
  if (hamiltonian.slope_left_of(p) > 0.0)
    out.p_minus = scan_left_for_level(hamiltonian, p, level);
  if (hamiltonian.slope_right_of(p) > 0.0)
    out.p_plus = scan_right_for_level(hamiltonian, p, level);
  return out;
}

ValidationReport validate_set_limiter(const SetLimiter& limiter, const PLFunction& hamiltonian) {
  if (!check_coercive(hamiltonian))
    throw NotCoerciveError("validate_set_limiter: H must be coercive");
  ValidationReport report;
  auto fail = [&](const std::string& msg) {
    report.valid = false;
    report.violations.push_back(msg);
  };

  std::vector<LimiterPoint> pts = limiter.points;
  std::sort(pts.begin(), pts.end(),
            [](const LimiterPoint& a, const LimiterPoint& b) { return a.p_alpha < b.p_alpha; });

  for (const auto& q : pts) {
    std::ostringstream id;
    id << "p_alpha=" << q.p_alpha;
    if (!(q.p_minus <= q.p_alpha + kTol) || (!std::isinf(q.p_plus) && q.p_alpha > q.p_plus + kTol))
      fail("point " + id.str() + ": p_alpha outside [p_minus, p_plus]");
    const double width = q.p_plus - q.p_minus;  // +inf handled naturally
    if (!(width > kTight)) fail("point " + id.str() + ": degenerate plateau (p_minus = p_plus)");
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].level < pts[i + 1].level - kTol) {
      std::ostringstream msg;
      msg << "levels increase from p_alpha=" << pts[i].p_alpha << " to p_alpha=" << pts[i + 1].p_alpha;
      fail(msg.str());
    }
  }

  // covering: candidate points where (p_minus, p) or (p, p_plus) gaps must be met
  std::vector<double> cand;
  for (const auto& b : hamiltonian.breakpoints()) cand.push_back(b.p);
  for (const auto& q : pts) {
    cand.push_back(q.p_minus);
    if (!std::isinf(q.p_plus)) cand.push_back(q.p_plus);
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double gap_lo = std::isinf(pts[i].p_plus) ? pts[i].p_minus : pts[i].p_plus;
    const double gap_hi = pts[i + 1].p_minus;
    if (gap_lo < gap_hi) cand.push_back(0.5 * (gap_lo + gap_hi));
  }
  cand.push_back(hamiltonian.front_p() - 1.0);
  cand.push_back(hamiltonian.back_p() + 1.0);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  for (double x : cand) {
    const SlopeBounds sb = slope_bounds(hamiltonian, x);
    if (x - sb.p_minus > kTight) {
      bool met = false;
      for (const auto& q : pts)
        if (intervals_meet(q.p_minus, q.p_plus, sb.p_minus, x)) {
          met = true;
          break;
        }
      if (!met) {
        std::ostringstream msg;
        msg << "covering violated: no plateau meets (" << sb.p_minus << ", " << x << ")";
        fail(msg.str());
      }
    }
    if (sb.p_plus - x > kTight) {
      bool met = false;
      for (const auto& q : pts)
        if (intervals_meet(q.p_minus, q.p_plus, x, sb.p_plus)) {
          met = true;
          break;
        }
      if (!met) {
        std::ostringstream msg;
        msg << "covering violated: no plateau meets (" << x << ", " << sb.p_plus << ")";
        fail(msg.str());
      }
    }
  }
  return report;
}

EffectiveFlux build_flux(const SetLimiter& limiter, const PLFunction& hamiltonian) {
  ValidationReport report = validate_set_limiter(limiter, hamiltonian);
  if (!report.valid) {
    std::string what = "build_flux: invalid set limiter:";
    for (const auto& v : report.violations) what += "\n  " + v;
    throw InvalidLimiterError(what);
  }
  std::vector<LimiterPoint> pts = limiter.points;
  std::sort(pts.begin(), pts.end(),
            [](const LimiterPoint& a, const LimiterPoint& b) { return a.p_minus < b.p_minus; });

  const auto& hbps = hamiltonian.breakpoints();
  std::vector<Breakpoint> out;
  double right_tail = hamiltonian.right_tail_slope();
  std::size_t bi = 0;
  bool unbounded = false;
  auto push = [&out](double p, double v) {
    if (out.empty() || p > out.back().p + kTight) out.push_back({p, v});
  };
  for (const auto& q : pts) {
    while (bi < hbps.size() && hbps[bi].p < q.p_minus - kTight) {
      push(hbps[bi].p, hbps[bi].value);
      ++bi;
    }
    push(q.p_minus, q.level);
    if (std::isinf(q.p_plus)) {
      right_tail = 0.0;
      unbounded = true;
      break;
    }
    push(q.p_plus, q.level);
    while (bi < hbps.size() && hbps[bi].p <= q.p_plus + kTight) ++bi;
  }
  if (!unbounded) {
    while (bi < hbps.size()) {
      push(hbps[bi].p, hbps[bi].value);
      ++bi;
    }
  }
  PLFunction flux =
      simplified(PLFunction(std::move(out), hamiltonian.left_tail_slope(), right_tail));
  SetLimiter sorted;
  sorted.points = std::move(pts);
  std::sort(sorted.points.begin(), sorted.points.end(),
            [](const LimiterPoint& a, const LimiterPoint& b) { return a.p_alpha < b.p_alpha; });
  return EffectiveFlux{std::move(flux), std::move(sorted)};
}

namespace {

struct Candidate {
  double p;
  double h;
  double f;
  SlopeBounds sb;
};

std::vector<Candidate> classification_candidates(const PLFunction& H, const PLFunction& F) {
  std::vector<double> coords;
  for (const auto& b : H.breakpoints()) coords.push_back(b.p);
  for (const auto& b : F.breakpoints()) coords.push_back(b.p);
  for (double r : crossings(F, H)) coords.push_back(r);
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end(),
                           [](double a, double b) { return std::abs(a - b) <= kTight; }),
               coords.end());
  std::vector<Candidate> cand;
  cand.reserve(coords.size());
  for (double p : coords) cand.push_back({p, H(p), F(p), slope_bounds(H, p)});
  return cand;
}

SetLimiter dedup_by_plateau(std::vector<LimiterPoint> accepted) {
  std::vector<LimiterPoint> unique_pts;
  for (const auto& a : accepted) {
    bool merged = false;
    for (auto& u : unique_pts) {
      if (plateau_equal(a, u)) {
        if (std::abs(a.p_alpha) < std::abs(u.p_alpha)) u = a;
        merged = true;
        break;
      }
    }
    if (!merged) unique_pts.push_back(a);
  }
  std::sort(unique_pts.begin(), unique_pts.end(),
            [](const LimiterPoint& a, const LimiterPoint& b) { return a.p_alpha < b.p_alpha; });
  return SetLimiter{std::move(unique_pts)};
}

}  // namespace

SetLimiter compute_set_limiter(const PLFunction& hamiltonian, const PLFunction& flux) {
  if (!check_coercive(hamiltonian))
    throw NotCoerciveError("compute_set_limiter: H must be coercive");
  if (!is_nonincreasing(flux))
    throw std::invalid_argument("compute_set_limiter: F must be non-increasing");
  if (!check_semicoercive(flux))
    throw std::invalid_argument("compute_set_limiter: F must be semi-coercive");

  const std::vector<Candidate> cand = classification_candidates(hamiltonian, flux);
  std::vector<LimiterPoint> accepted;
  for (const auto& c : cand) {
    bool sous = (c.p - c.sb.p_minus > kTight) && (c.f >= c.h - kTol);
    if (sous) {
      for (const auto& q : cand) {
        if (q.f >= q.h - kTol && q.h > c.h + kTol &&
            intervals_meet(q.sb.p_minus, q.sb.p_plus, c.sb.p_minus, c.p)) {
          sous = false;
          break;
        }
      }
    }
    bool sur = (c.sb.p_plus - c.p > kTight) && (c.f <= c.h + kTol);
    if (sur) {
      for (const auto& q : cand) {
        if (q.f <= q.h + kTol && q.h < c.h - kTol &&
            intervals_meet(q.sb.p_minus, q.sb.p_plus, c.p, c.sb.p_plus)) {
          sur = false;
          break;
        }
      }
    }
    if (sous || sur) accepted.push_back({c.p, c.sb.p_minus, c.sb.p_plus, c.h});
  }
  return dedup_by_plateau(std::move(accepted));
}

SetLimiter oracle_set_limiter(const PLFunction& hamiltonian, const PLFunction& flux,
                              const OracleGrid& grid) {
  if (!check_coercive(hamiltonian))
    throw NotCoerciveError("oracle_set_limiter: H must be coercive");
  const long n = static_cast<long>(std::floor((grid.hi - grid.lo) / grid.step)) + 1;
  std::vector<double> ps(n), hv(n), fv(n), pm(n), pp(n);
  for (long i = 0; i < n; ++i) {
    const double p = grid.lo + static_cast<double>(i) * grid.step;
    ps[i] = p;
    hv[i] = hamiltonian(p);
    fv[i] = flux(p);
    const SlopeBounds sb = slope_bounds(hamiltonian, p);
    pm[i] = sb.p_minus;
    pp[i] = sb.p_plus;
  }
  std::vector<LimiterPoint> accepted;
  for (long i = 0; i < n; ++i) {
    bool sous = (ps[i] - pm[i] > kTight) && (fv[i] >= hv[i] - kTol);
    if (sous) {
      for (long j = 0; j < n; ++j) {
        if (fv[j] >= hv[j] - kTol && hv[j] > hv[i] + kTol &&
            intervals_meet(pm[j], pp[j], pm[i], ps[i])) {
          sous = false;
          break;
        }
      }
    }
    bool sur = (pp[i] - ps[i] > kTight) && (fv[i] <= hv[i] + kTol);
    if (sur) {
      for (long j = 0; j < n; ++j) {
        if (fv[j] <= hv[j] + kTol && hv[j] < hv[i] - kTol &&
            intervals_meet(pm[j], pp[j], ps[i], pp[i])) {
          sur = false;
          break;
        }
      }
    }
    if (sous || sur) accepted.push_back({ps[i], pm[i], pp[i], hv[i]});
  }
  // accepted points form contiguous grid runs around each true limiter
  // point; one cluster per run, represented by its entry of minimal |p|
  std::vector<LimiterPoint> clusters;
  double run_end = 0.0;
  for (const auto& a : accepted) {
    if (!clusters.empty() && a.p_alpha - run_end <= 2.5 * grid.step) {
      if (std::abs(a.p_alpha) < std::abs(clusters.back().p_alpha)) clusters.back() = a;
    } else {
      clusters.push_back(a);
    }
    run_end = a.p_alpha;
  }
  return SetLimiter{std::move(clusters)};
}

SetLimiter compute_A0(const PLFunction& hamiltonian) {
  if (!check_coercive(hamiltonian)) throw NotCoerciveError("compute_A0: H must be coercive");
  // candidates: breakpoints that are local minima approached weakly from the
  // left and strictly from the right (p_minus = p < p_plus)
  std::vector<Candidate> cand;
  for (const auto& b : hamiltonian.breakpoints()) {
    if (hamiltonian.slope_left_of(b.p) <= kTight && hamiltonian.slope_right_of(b.p) > kTight)
      cand.push_back({b.p, b.value, 0.0, slope_bounds(hamiltonian, b.p)});
  }
  std::vector<LimiterPoint> accepted;
  for (const auto& c : cand) {
    if (c.p - c.sb.p_minus > kTight) continue;  // needs p_minus = p
    if (!(c.sb.p_plus - c.p > kTight)) continue;
    bool ok = true;
    for (const auto& q : cand) {
      if (q.h < c.h - kTol && intervals_meet(q.sb.p_minus, q.sb.p_plus, c.p, c.sb.p_plus)) {
        ok = false;
        break;
      }
    }
    if (ok) accepted.push_back({c.p, c.sb.p_minus, c.sb.p_plus, c.h});
  }
  return dedup_by_plateau(std::move(accepted));
}

EffectiveFlux effective_flux(const PLFunction& hamiltonian, const PLFunction& flux) {
  return build_flux(compute_set_limiter(hamiltonian, flux), hamiltonian);
}

bool same_plateaus(const SetLimiter& a, const SetLimiter& b, double tol) {
  if (a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const auto& x = a.points[i];
    const auto& y = b.points[i];
    if (std::abs(x.p_minus - y.p_minus) > tol) return false;
    if (std::isinf(x.p_plus) != std::isinf(y.p_plus)) return false;
    if (!std::isinf(x.p_plus) && std::abs(x.p_plus - y.p_plus) > tol) return false;
    if (std::abs(x.level - y.level) > tol) return false;
  }
  return true;
}

}  // namespace hjhalf
