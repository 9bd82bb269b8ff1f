#include "hypcert/poly_roots.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#include "hypcert/errors.hpp"

namespace hypcert {

namespace {

constexpr int kMaxSweeps = 400;

double log_abs(const HPReal& x) {
  long e = 0;
  double d = mpfr_get_d_2exp(&e, x.raw(), MPFR_RNDN);
  return std::log(std::fabs(d)) + static_cast<double>(e) * 0.6931471805599453;
}

HPReal pow2(long exponent, Precision p) {
  HPReal r(p);
  mpfr_set_ui_2exp(r.raw(), 1, exponent, MPFR_RNDN);
  return r;
}

// Starting points on circles whose radii follow the upper convex hull of
// (k, log |c_k|); this is the standard Newton-polygon placement and puts
// each iterate near the annulus that holds its share of the roots.
std::vector<HPComplex> initial_points(const std::vector<HPComplex>& c, Precision p) {
  const int deg = static_cast<int>(c.size()) - 1;
  std::vector<int> ks;
  std::vector<double> ys;
  for (int k = 0; k <= deg; ++k) {
    if (!c[static_cast<size_t>(k)].is_zero()) {
      ks.push_back(k);
      ys.push_back(log_abs(abs(c[static_cast<size_t>(k)])));
    }
  }
  std::vector<size_t> hull;
  for (size_t i = 0; i < ks.size(); ++i) {
    while (hull.size() >= 2) {
      size_t a = hull[hull.size() - 2];
      size_t b = hull[hull.size() - 1];
      // Keep b only while it sits strictly above the chord from a to i.
      double cross = (ys[b] - ys[a]) * (ks[i] - ks[a]) - (ys[i] - ys[a]) * (ks[b] - ks[a]);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }

  std::vector<HPComplex> z;
  z.reserve(static_cast<size_t>(deg));
  const double two_pi = 6.283185307179586476925287;
  for (size_t s = 0; s + 1 < hull.size(); ++s) {
    int k1 = ks[hull[s]];
    int k2 = ks[hull[s + 1]];
    int count = k2 - k1;
    double log_radius = (ys[hull[s]] - ys[hull[s + 1]]) / count;
    HPReal radius(p);
    mpfr_set_d(radius.raw(), log_radius, MPFR_RNDN);
    mpfr_exp(radius.raw(), radius.raw(), MPFR_RNDN);
    for (int j = 0; j < count; ++j) {
      double theta = two_pi * (j + 0.5) / count + 0.377 * static_cast<double>(s + 1) +
                     two_pi * k1 / (3.0 * deg + 1.0);
      HPReal angle(p);
      mpfr_set_d(angle.raw(), theta, MPFR_RNDN);
      z.emplace_back(radius * cos(angle), radius * sin(angle));
    }
  }
  return z;
}

}  // namespace

std::vector<HPComplex> polynomial_roots(const std::vector<HPComplex>& coeffs) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg >= 0 && coeffs[static_cast<size_t>(deg)].is_zero()) {
    --deg;
  }
  if (deg < 0) {
    throw RootFindingError("zero polynomial has no defined root set");
  }
  if (deg == 0) {
    return {};
  }

  Precision p = coeffs[0].precision();
  for (const HPComplex& z : coeffs) {
    p = max(p, z.precision());
  }

  std::vector<HPComplex> zero_roots;
  std::vector<HPComplex> c(coeffs.begin(), coeffs.begin() + deg + 1);
  while (c.size() > 1 && c.front().is_zero()) {
    zero_roots.emplace_back(p);
    c.erase(c.begin());
  }
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 0) {
    return zero_roots;
  }
  const HPComplex& lead = c.back();
  for (int k = 0; k < n; ++k) {
    c[static_cast<size_t>(k)] = c[static_cast<size_t>(k)] / lead;
  }
  c[static_cast<size_t>(n)] = HPComplex(1, 0, p);

  std::vector<HPReal> cmag;
  cmag.reserve(c.size());
  for (const HPComplex& ck : c) {
    cmag.push_back(abs(ck));
  }

  std::vector<HPComplex> z = initial_points(c, p);
  std::vector<bool> frozen(static_cast<size_t>(n), false);

  const HPReal noise = pow2(1 - static_cast<long>(p.bits()), p) * HPReal(4 * n + 8, p);
  const HPReal stall = pow2(6 - static_cast<long>(p.bits()), p);
  const HPReal bump = pow2(-static_cast<long>(p.bits()) / 2, p);
  const HPReal one(1, p);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool all_frozen = true;
    for (int i = 0; i < n; ++i) {
      if (frozen[static_cast<size_t>(i)]) {
        continue;
      }
      all_frozen = false;
      const HPComplex& zi = z[static_cast<size_t>(i)];

      HPComplex value = c[static_cast<size_t>(n)];
      HPComplex deriv;
      HPReal mag = cmag[static_cast<size_t>(n)];
      HPReal zabs = abs(zi);
      for (int k = n - 1; k >= 0; --k) {
        deriv = deriv * zi + value;
        value = value * zi + c[static_cast<size_t>(k)];
        mag = mag * zabs + cmag[static_cast<size_t>(k)];
      }

      if (abs(value) <= mag * noise) {
        frozen[static_cast<size_t>(i)] = true;
        continue;
      }
      if (deriv.is_zero()) {
        HPReal step = bump * (one + zabs);
        z[static_cast<size_t>(i)] = zi + HPComplex(step, step);
        continue;
      }

      HPComplex newton = value / deriv;
      HPComplex repulsion;
      bool collided = false;
      for (int j = 0; j < n; ++j) {
        if (j == i) {
          continue;
        }
        HPComplex diff = zi - z[static_cast<size_t>(j)];
        if (diff.is_zero()) {
          collided = true;
          break;
        }
        repulsion += reciprocal(diff);
      }
      if (collided) {
        HPReal step = bump * (one + zabs);
        z[static_cast<size_t>(i)] = zi + HPComplex(step, -step);
        continue;
      }

      HPComplex denom = HPComplex(1, 0, p) - newton * repulsion;
      HPComplex correction = denom.is_zero() ? newton : newton / denom;
      z[static_cast<size_t>(i)] = zi - correction;
      if (abs(correction) <= zabs * stall) {
        frozen[static_cast<size_t>(i)] = true;
      }
    }
    if (all_frozen) {
      break;
    }
    if (sweep + 1 == kMaxSweeps) {
      throw RootFindingError("root iteration did not settle within the sweep budget");
    }
  }

  std::vector<HPComplex> roots = std::move(zero_roots);
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace hypcert
