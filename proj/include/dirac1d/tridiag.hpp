// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <dirac1d/types.hpp>

#include <vector>

namespace dirac1d {

/// Symmetric tridiagonal matrix: diag has n entries, off has n-1.
struct SymTridiag {
  Vec diag;
  Vec off;

  Index size() const { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T sign count).
Index count_eigenvalues_below(const SymTridiag& t, Real x);

/// The k smallest eigenvalues, ascending, by bisection on the Sturm count.
Vec lowest_eigenvalues(const SymTridiag& t, Index k);

/// Eigenvector for an isolated eigenvalue near lambda, by inverse iteration.
/// Returned vector has unit Euclidean norm and positive first significant
/// component (deterministic sign).
Vec eigenvector(const SymTridiag& t, Real lambda);

/// Interior sign changes of a sampled function (ignores |u| below a relative
/// floor). Used to order numerically degenerate eigenpairs by node count.
int count_nodes(const Vec& u);

/// Sorts (lambda, vector) pairs: ascending lambda, but pairs closer than
/// gap_tol are ordered by node count (Sturm-Liouville spectra are simple, so
/// numerical degeneracy is a discretization artifact).
void order_degenerate_by_node_count(std::vector<Real>& lambdas, std::vector<Vec>& vectors,
                                    Real gap_tol = 1e-12);

}  // namespace dirac1d
