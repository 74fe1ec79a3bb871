#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crlie/crcore/cr.hpp"
#include "crlie/matrixlie/classical.hpp"

namespace crlie {

enum class FormKind { SU, SLH, SO, CompactSU, CompactSO, CompactSP };

/// Names: "su:p,q", "slH:n", "so:p,q", "compact-su:n", "compact-so:n",
/// "compact-sp:n".
struct RealFormSpec {
  FormKind kind = FormKind::CompactSU;
  int p = 0;
  int q = 0;

  static RealFormSpec parse(const std::string& name);
  std::string name() const;
  /// Size of the defining matrices.
  int n() const;
};

enum class RootKind { Real, ImaginaryCompact, ImaginaryNoncompact, Complex };
const char* to_string(RootKind k);

/// Cartan involution, theta-fixed subalgebra and the diagonal Cartan of g.
struct RealForm {
  RealFormSpec spec;
  WeightRealization g;
  AmbientPtr k;
  /// Realization of k on its own diagonal Cartan when k is a standard
  /// classical algebra (sl_n(H) and the compact forms).
  std::optional<WeightRealization> k_roots;
  /// theta = Ad(p), or X -> -j X^T j^{-1} when transpose_type.
  DenseMatrix p;
  DenseMatrix j;
  bool transpose_type = false;

  DenseMatrix theta(const DenseMatrix& x) const;
  /// Conjugation of g with respect to the real form: theta composed with
  /// X -> -X^*.
  DenseMatrix sigma0(const DenseMatrix& x) const;
  /// (X + theta X) / 2.
  DenseMatrix pi(const DenseMatrix& x) const;
  const RootSystem& roots() const { return g.roots(); }
  /// Flat gl_n coordinates of k.
  Space k_flat() const;
};

/// Builds g, theta and k, and verifies that theta and X -> -X^* are
/// commuting involutions of g whose fixed points give k and a compact form.
RealForm build_real_form(const RealFormSpec& spec);

struct RootClassification {
  std::vector<RootKind> kind;
  std::vector<int> sigma_star;
  std::vector<int> theta_star;
  RootMask real, compact, noncompact, complex_roots;

  RootMask imaginary() const { return compact | noncompact; }
  RootMask apply(const std::vector<int>& map, const RootMask& m) const;
};

/// Reads sigma* and theta* off the root vectors. Throws VerificationError if
/// theta* differs from -sigma* or the standard positive system is not
/// compatible (conj of a positive complex root negative).
RootClassification classify_roots(const RealForm& form);

/// Black nodes and arrows of the Satake diagram (1-based simple roots).
struct SatakeData {
  std::vector<int> black;
  std::vector<std::pair<int, int>> arrows;
};
SatakeData satake_data(const RealForm& form, const RootClassification& rc);

struct ThetaSets {
  RootMask f, fn, fr;
  RootMask f_star;   // F without noncompact imaginary roots
  RootMask f_theta;  // F* meet theta*(F*)
  RootMask f_theta_n;
  RootMask f_theta_r;  // F_r meet theta*(F_r)
};

ThetaSets theta_sets(const RealForm& form, const RootClassification& rc, const std::vector<int>& crosses);

struct MinimalOrbit {
  ThetaSets sets;
  Space f;  // flat gl_n coordinates
  Subalg v;
  Subalg nr;
  Subalg levi;
  Subalg h_plus;
};

/// v = f meet k and nr(v), each computed from matrices and from the root
/// formulas; the two paths must agree and v must be n-reductive.
MinimalOrbit build_minimal_orbit(const RealForm& form, const RootClassification& rc, const std::vector<int>& crosses);

struct CriterionWitness {
  int alpha;  // member of the strongly orthogonal system
  int beta;
  int sum;
};

struct TypeCriteria {
  bool type_I = false;
  bool type_II = false;
  std::vector<RootMask> systems;  // maximal strongly orthogonal real roots in F
  /// First violation per system, if any.
  std::vector<std::optional<CriterionWitness>> witness_I;
  std::vector<std::optional<CriterionWitness>> witness_II;
};

TypeCriteria type_criteria(const RealForm& form, const RootClassification& rc, const ThetaSets& sets);

/// "a1+a2" in simple-root coordinates.
std::string simple_label(const RootSystem& sys, int root);

}  // namespace crlie
