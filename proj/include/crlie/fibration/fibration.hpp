#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "crlie/regularize/regularize.hpp"

namespace crlie {

struct MapClassification {
  bool is_cr = false;
  bool is_submersion = false;
  bool is_spread = false;
  bool is_deployment = false;
  bool fibers_totally_real = false;
  bool fibers_totally_complex = false;
};

template <class S>
struct ClassifiedMap {
  MapClassification flags;
  S generated;       // lie(v + L(e))
  S v_meet_conj_e;   // v meet conj(e)
  S e_meet_conj_v;   // e meet conj(v)
};

/// Flags of the equivariant map (k, v) -> (k, e).
template <class B>
ClassifiedMap<typename B::Space> classify_map(const B& b, const typename B::Space& v, const typename B::Space& e) {
  const auto le = levi_intersection(b, e);
  ClassifiedMap<typename B::Space> out{{}, b.lie_closure(b.join(v, le)), b.meet(v, b.conj(e)), b.meet(e, b.conj(v))};
  auto& f = out.flags;
  f.is_cr = b.contains(e, v);
  if (!f.is_cr) return out;
  f.is_submersion = b.join(v, le) == e;
  f.is_spread = out.generated == e;
  f.fibers_totally_real = out.v_meet_conj_e == out.e_meet_conj_v && out.v_meet_conj_e == levi_intersection(b, v);
  f.fibers_totally_complex = b.join(out.v_meet_conj_e, out.e_meet_conj_v) == le;
  f.is_deployment = f.is_spread && f.fibers_totally_real;
  return out;
}

/// q in Par(v): v inside q and nr(v) meet L(q) = 0.
template <class B>
bool par_membership(const B& b, const typename B::Space& v, const typename B::Space& q) {
  return b.contains(q, v) && b.dim(b.meet(b.nr(v), levi_intersection(b, q))) == 0;
}

template <class S>
struct DeploymentCheck {
  bool lie_generated = false;     // lie(nr(v) + L(q)) = q
  bool module_generated = false;  // module closure of nr(v) under L(q), plus L(q), equals q
  ClassifiedMap<S> map;
  bool holds() const { return lie_generated && map.flags.is_deployment; }
};

template <class B>
DeploymentCheck<typename B::Space> deployment_verify(const B& b, const typename B::Space& v, const typename B::Space& q) {
  if (!is_n_reductive(b, v).holds) throw DimensionError("deployment check needs an n-reductive v");
  if (!par_membership(b, v, q)) throw DimensionError("deployment check needs q in Par(v)");
  const auto nr = b.nr(v);
  const auto lq = levi_intersection(b, q);
  DeploymentCheck<typename B::Space> out{false, false, classify_map(b, v, q)};
  out.lie_generated = b.lie_closure(b.join(nr, lq)) == q;
  out.module_generated = b.join(b.module_closure(nr, lq), lq) == q;
  return out;
}

template <class S>
struct Lift {
  S vq;
  bool input_n_reductive = false;
};

/// v_q = v + nr(q), with the structural identities asserted.
template <class B>
Lift<typename B::Space> lift(const B& b, const typename B::Space& v, const typename B::Space& q) {
  if (!par_membership(b, v, q)) throw DimensionError("lift: q is not in Par(v)");
  const auto nrq = b.nr(q);
  Lift<typename B::Space> out{b.join(v, nrq), is_n_reductive(b, v).holds};
  if (!b.is_subalgebra(out.vq)) throw VerificationError("lift: v + nr(q) is not a subalgebra");
  if (!(b.nr(out.vq) == b.join(b.nr(v), nrq))) throw VerificationError("lift: nr(v_q) differs from nr(v) + nr(q)");
  if (out.input_n_reductive) {
    if (!(levi_intersection(b, out.vq) == levi_intersection(b, v))) throw VerificationError("lift: Levi intersection changed");
    if (!is_n_reductive(b, out.vq).holds) throw VerificationError("lift: v_q is not n-reductive");
    if (!strengthens(b, v, out.vq)) throw VerificationError("lift: v_q does not strengthen v");
  }
  return out;
}

struct HomotopicCharacteristic {
  Eigen::Index value = 0;            // rank s - dim(tau meet s)
  Eigen::Index rank_s = 0;
  Eigen::Index tau_meet_s = 0;
  bool torus_meet_s_in_tau = false;  // t meet s inside tau
  bool t_is_tau_plus_z = false;      // t = tau + z(L(q))
};

/// s = [L(q), L(q)], tau a maximal torus of m, t a maximal torus of L(q)
/// containing tau.
template <class B>
HomotopicCharacteristic homotopic_characteristic(const B& b, const typename B::Space& q, const typename B::Space& m) {
  const auto lq = levi_intersection(b, q);
  if (!b.contains(lq, m)) throw DimensionError("homotopic characteristic: m is not inside L(q)");
  const auto s = b.derived(lq);
  const auto tau = b.maximal_torus(m);
  const auto t = b.maximal_torus(b.centralizer_in(lq, tau));
  if (!b.contains(t, tau)) throw VerificationError("torus of L(q) does not contain tau");
  const auto z = b.centralizer_in(lq, lq);
  HomotopicCharacteristic h;
  h.rank_s = b.rank(s);
  h.tau_meet_s = b.dim(b.meet(tau, s));
  h.value = h.rank_s - h.tau_meet_s;
  h.torus_meet_s_in_tau = b.contains(tau, b.meet(t, s));
  h.t_is_tau_plus_z = b.join(tau, z) == t;
  return h;
}

/// nr(q1) + (q1 meet q2), certified and checked to stay in Par(v).
template <class B>
ParabolicDescriptor<typename B::Space> combine_parabolics(const B& b, const typename B::Space& v, const typename B::Space& q1,
                                                          const typename B::Space& q2) {
  if (!par_membership(b, v, q1) || !par_membership(b, v, q2)) throw DimensionError("combine: inputs are not in Par(v)");
  auto d = describe_parabolic(b, b.join(b.nr(q1), b.meet(q1, q2)));
  if (!par_membership(b, v, d.q)) throw VerificationError("combined parabolic left Par(v)");
  return d;
}

// Root-set searches.

/// Inclusion-maximal q in Par(v), optionally with w inside q, in mask order.
std::vector<ParabolicRootSet> maximal_par(const RegularSubalgebra& v, const std::optional<RootMask>& within = std::nullopt,
                                          int rank_cap = 6);
/// Inclusion-minimal q in Par(v). Throws VerificationError unless every
/// result has nr(v) inside nr(q) and all Levi root sets are Weyl conjugate.
std::vector<ParabolicRootSet> minimal_par(const RegularSubalgebra& v, int rank_cap = 6);

struct ZRoot {
  std::vector<mpq_class> restriction;  // values on the basis of z
  std::vector<int> coefficients;       // in the simple z-roots
  RootMask component;
  bool positive = false;
};

struct ZRootDecomposition {
  Subspace<GaussRational> center;
  std::vector<ZRoot> zroots;  // positive ones first
  std::vector<std::size_t> simple;
};

ZRootDecomposition z_root_decomposition(const RootSystem& sys, const ParabolicRootSet& q);

/// "nu1+2nu2" style label of a z-root.
std::string zroot_label(const ZRoot& z);

}  // namespace crlie
