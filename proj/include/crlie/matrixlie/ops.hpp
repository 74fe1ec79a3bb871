#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "crlie/exactlin/polynomial.hpp"
#include "crlie/matrixlie/ambient.hpp"

namespace crlie {

/// Smallest subalgebra containing s.
Subalg bracket_closure(const Subalg& s);
Subalg bracket_closure(std::shared_ptr<const AmbientAlgebra> ambient, const std::vector<DenseMatrix>& generators);
/// Smallest ad(l)-invariant subspace containing x.
Subalg module_closure(const Subalg& x, const Subalg& l);
/// Span of [a, b].
Subalg bracket_space(const Subalg& a, const Subalg& b);
Subalg derived(const Subalg& v);
bool is_abelian(const Subalg& v);
bool is_solvable(const Subalg& v);

/// {X in k : [X, target] in target}, one linear solve.
Subalg normalizer(const Subalg& target);
/// {X in k : [X, s] = 0 for s in S}.
Subalg centralizer(const Subalg& s);
Subalg centralizer(std::shared_ptr<const AmbientAlgebra> ambient, const DenseMatrix& x);
/// Centralizer of x inside c.
Subalg centralizer_within(const Subalg& c, const Vector& x);

/// Orthogonal complement of [v, v] under the Killing form of v. Throws
/// VerificationError if the result is not solvable.
Subalg radical(const Subalg& v);

/// The ideal of nilpotent elements of rad(v). Throws VerificationError when
/// the self-checks fail (ideal, nilpotent matrices, contains [v, v] ∩ rad v).
Subalg nilradical_nr(const Subalg& v);

struct JCDecomposition {
  DenseMatrix semisimple;
  DenseMatrix nilpotent;
};
/// X = X_s + X_n with X_s a polynomial in X; invariants are checked before
/// returning.
JCDecomposition jordan_chevalley(const DenseMatrix& x);

struct SplittableEvidence {
  bool pass = true;
  int checked = 0;
  std::uint64_t seed = 0;
  std::optional<DenseMatrix> witness;
  std::string detail;
};
/// Checks X_s, X_n in v for every basis element and for `trials` seeded
/// random combinations. Evidence only: passing is not a proof.
SplittableEvidence splittable_evidence(const Subalg& v, int trials, std::uint64_t seed);

/// Maximal torus of a conjugation-stable subalgebra c (a complexified compact
/// algebra), as the centralizer in c of a seeded random conjugation-fixed
/// element. Redraws up to a fixed budget until the centralizer is abelian.
Subalg maximal_torus(const Subalg& c, std::uint64_t seed);
Eigen::Index rank_of(const Subalg& c, std::uint64_t seed);

/// q_A: sum of the eigenspaces of ad(A) for eigenvalues i*lambda, lambda >= 0.
/// A must be conjugation fixed with spectrum in i*Q.
Subalg parabolic_from_element(std::shared_ptr<const AmbientAlgebra> ambient, const DenseMatrix& a);

/// ad(x) on the ambient, columns indexed by the basis.
DenseMatrix adjoint_matrix(const AmbientAlgebra& amb, const Vector& x);

}  // namespace crlie
