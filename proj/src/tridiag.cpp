// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/tridiag.hpp>

#include <dirac1d/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dirac1d {

namespace {

// Gershgorin bounds for the spectrum.
std::pair<Real, Real> spectral_bounds(const SymTridiag& t) {
  const Index n = t.size();
  Real lo = std::numeric_limits<Real>::max();
  Real hi = std::numeric_limits<Real>::lowest();
  for (Index i = 0; i < n; ++i) {
    Real r = 0;
    if (i > 0) r += std::abs(t.off[i - 1]);
    if (i < n - 1) r += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  return {lo, hi};
}

}  // namespace

Index count_eigenvalues_below(const SymTridiag& t, Real x) {
  const Index n = t.size();
  const Real tiny = std::numeric_limits<Real>::min() / std::numeric_limits<Real>::epsilon();
  Index count = 0;
  Real q = t.diag[0] - x;
  if (q < 0) ++count;
  for (Index i = 1; i < n; ++i) {
    if (std::abs(q) < tiny) q = (q < 0) ? -tiny : tiny;
    q = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / q;
    if (q < 0) ++count;
  }
  return count;
}

Vec lowest_eigenvalues(const SymTridiag& t, Index k) {
  const Index n = t.size();
  if (k < 1) throw DomainError("requested level count must be >= 1");
  if (k > n) throw DomainError("requested more eigenvalues than matrix dimension");
  auto [lo, hi] = spectral_bounds(t);
  const Real scale = std::max({std::abs(lo), std::abs(hi), Real(1)});
  Vec out(k);
  for (Index j = 0; j < k; ++j) {
    Real a = lo, b = hi;
    // invariant: count(a) <= j < count(b)
    while (b - a > 2.0 * std::numeric_limits<Real>::epsilon() * scale) {
      const Real mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (count_eigenvalues_below(t, mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out[j] = 0.5 * (a + b);
  }
  return out;
}

Vec eigenvector(const SymTridiag& t, Real lambda) {
  const Index n = t.size();
  const auto [lo, hi] = spectral_bounds(t);
  const Real scale = std::max({std::abs(lo), std::abs(hi), Real(1)});
  // small shift off the eigenvalue keeps the factorization well defined
  const Real shift = lambda + 1e-11 * scale;

  // LU factorization of (T - shift I) with partial pivoting (dgttrf style).
  Vec dl = t.off;   // subdiagonal
  Vec d = t.diag - shift;
  Vec du = t.off;   // superdiagonal
  Vec du2 = Vec::Zero(std::max<Index>(n - 2, 0));
  std::vector<int> pivoted(std::max<Index>(n - 1, 0), 0);
  for (Index i = 0; i < n - 1; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      const Real safe = std::abs(d[i]) > 0 ? d[i] : 1e-300;
      const Real m = dl[i] / safe;
      dl[i] = m;  // store multiplier
      d[i + 1] -= m * du[i];
      if (i < n - 2) du2[i] = 0;
    } else {
      pivoted[i] = 1;
      const Real m = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = m;
      const Real tmp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = tmp - m * d[i + 1];
      if (i < n - 2) {
        du2[i] = du[i + 1];
        du[i + 1] = -m * du[i + 1];
      }
    }
  }

  auto solve_in_place = [&](Vec& x) {
    for (Index i = 0; i < n - 1; ++i) {
      if (pivoted[i]) std::swap(x[i], x[i + 1]);
      x[i + 1] -= dl[i] * x[i];
    }
    for (Index i = n - 1; i >= 0; --i) {
      Real v = x[i];
      if (i < n - 1) v -= du[i] * x[i + 1];
      if (i < n - 2) v -= du2[i] * x[i + 2];
      const Real piv = std::abs(d[i]) > 0 ? d[i] : 1e-300;
      x[i] = v / piv;
    }
  };

  // deterministic start vector
  Vec x = Vec::Ones(n);
  for (Index i = 0; i < n; ++i) x[i] += 0.5 * std::sin(Real(i + 1));
  x /= std::sqrt(x.matrix().squaredNorm());
  for (int it = 0; it < 4; ++it) {
    solve_in_place(x);
    const Real nrm = std::sqrt(x.matrix().squaredNorm());
    if (!(nrm > 0) || !std::isfinite(nrm)) break;
    x /= nrm;
  }
  // deterministic sign: first component above the floor is positive
  const Real floor = 1e-8 * x.abs().maxCoeff();
  for (Index i = 0; i < n; ++i) {
    if (std::abs(x[i]) > floor) {
      if (x[i] < 0) x = -x;
      break;
    }
  }
  return x;
}

int count_nodes(const Vec& u) {
  const Real floor = 1e-9 * u.abs().maxCoeff();
  int nodes = 0;
  Real prev = 0;
  for (Index i = 0; i < u.size(); ++i) {
    if (std::abs(u[i]) <= floor) continue;
    if (prev != 0 && ((prev > 0) != (u[i] > 0))) ++nodes;
    prev = u[i];
  }
  return nodes;
}

void order_degenerate_by_node_count(std::vector<Real>& lambdas, std::vector<Vec>& vectors,
                                    Real gap_tol) {
  const std::size_t n = lambdas.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && std::abs(lambdas[j] - lambdas[j - 1]) <
                        gap_tol * std::max<Real>(1, std::abs(lambdas[j]))) {
      ++j;
    }
    if (j - i > 1) {
      std::vector<std::size_t> idx(j - i);
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) {
        return count_nodes(vectors[i + p]) < count_nodes(vectors[i + q]);
      });
      std::vector<Real> lam(j - i);
      std::vector<Vec> vecs(j - i);
      for (std::size_t p = 0; p < idx.size(); ++p) {
        lam[p] = lambdas[i + idx[p]];
        vecs[p] = vectors[i + idx[p]];
      }
      for (std::size_t p = 0; p < idx.size(); ++p) {
        lambdas[i + p] = lam[p];
        vectors[i + p] = std::move(vecs[p]);
      }
    }
    i = j;
  }
}

}  // namespace dirac1d
