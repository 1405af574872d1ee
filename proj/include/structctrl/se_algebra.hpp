#pragma once

#include <cstdint>
#include <vector>

#include "structctrl/basis.hpp"
#include "structctrl/pattern.hpp"
#include "structctrl/se_matrix.hpp"

namespace structctrl {

/// Bracket of two standard basis elements, computed structurally.
///
/// The standard identities (K = Kronecker delta) are
///   [R(i,j), R(k,l)] = K(j,k) R(i,l) + K(i,l) R(j,k) + K(j,l) R(k,i) + K(i,k) R(l,j)
///   [T(i),   T(j)  ] = 0
///   [R(i,j), T(k)  ] = K(j,k) T(i) - K(i,k) T(j)
/// With canonical index order at most one delta fires, so the result is
/// always 0 or a single signed basis element; rotation indices in reversed
/// order are re-canonicalized with a sign flip (R(j,i) = -R(i,j)).
/// Agrees exactly with dense_bracket composed with dense_of.
[[nodiscard]] SignedBasisTerm structural_bracket(const BasisElement& a, const BasisElement& b);

/// One derived-distribution step: d extended by the (structural) brackets of
/// all pairs of its elements. Monotone by construction.
[[nodiscard]] CanonicalSubspace derived_step(const CanonicalSubspace& d);

/// Iterates derived_step to its fixpoint, the Lie subalgebra generated by d.
/// The fixpoint is reached within n steps; exceeding that bound indicates an
/// implementation bug and throws std::logic_error.
[[nodiscard]] CanonicalSubspace lie_closure(const CanonicalSubspace& d);

/// The standard basis of the structured subspace determined by a pattern.
[[nodiscard]] CanonicalSubspace basis_of_pattern(const Pattern& p);

/// Exact Lie algebraic rank condition: the subalgebra generated by d equals
/// all of se(n). Tolerance-free (integer structural arithmetic throughout).
[[nodiscard]] bool larc_exact(const CanonicalSubspace& d);
[[nodiscard]] bool larc_exact(const Pattern& p);

/// A random numerical realization of the pattern: each basis element of the
/// pattern weighted by a coefficient drawn uniformly from [-1, 1] with the
/// band (-1e-3, 1e-3) excluded. Deterministic under `seed`.
[[nodiscard]] SeMatrixD sample_realization(const Pattern& p, std::uint64_t seed);

/// Numerical rank condition on the Lie algebra generated by the given
/// matrices. Works in coordinates over the standard basis (length n(n+1)/2),
/// repeatedly bracketing pairs and keeping vectors whose residual after
/// projection onto the current span exceeds `tol` times the largest vector
/// norm seen. True iff the generated algebra has full dimension.
[[nodiscard]] bool larc_numeric(const std::vector<SeMatrixD>& generators, double tol = 1e-9);

}  // namespace structctrl
