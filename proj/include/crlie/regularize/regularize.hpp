#pragma once

#include <string>
#include <vector>

#include "crlie/crcore/cr.hpp"

namespace crlie {

struct ParabolicCertificate {
  bool self_normalizing = false;
  bool q_plus_conj_is_k = false;
  bool triple_decomposition = false;
  bool ok() const { return self_normalizing && q_plus_conj_is_k && triple_decomposition; }
};

template <class S>
struct ParabolicDescriptor {
  S q;
  ParabolicCertificate certificate;
};

template <class S>
struct ChainStep {
  S v;
  S nr;
  Eigen::Index dim_v = 0;
  Eigen::Index dim_nr = 0;
};

/// v_0 = v, v_{m+1} = N(nr(v_m)). steps ends with the confirming step that
/// repeats the limit; stabilized_at is the first index carrying the limit.
template <class S>
struct RegularizationChain {
  std::vector<ChainStep<S>> steps;
  std::size_t stabilized_at = 0;
  ParabolicDescriptor<S> result;

  std::size_t length() const { return stabilized_at + 1; }
};

/// N(q) = q, q + conj(q) = k and k = nr(q) + L(q) + conj(nr(q)) directly.
template <class B>
ParabolicCertificate certify_parabolic(const B& b, const typename B::Space& q) {
  ParabolicCertificate c;
  const auto k = b.whole();
  c.self_normalizing = b.normalizer(q) == q;
  c.q_plus_conj_is_k = b.join(q, b.conj(q)) == k;
  const auto nr = b.nr(q);
  const auto levi = levi_intersection(b, q);
  const auto bar = b.conj(nr);
  c.triple_decomposition = b.dim(nr) + b.dim(levi) + b.dim(bar) == b.dim(k) && b.join(b.join(nr, levi), bar) == k;
  return c;
}

template <class B>
ParabolicDescriptor<typename B::Space> describe_parabolic(const B& b, const typename B::Space& q) {
  ParabolicDescriptor<typename B::Space> d{q, certify_parabolic(b, q)};
  if (!d.certificate.ok()) throw VerificationError("subalgebra failed the parabolic certificate");
  return d;
}

template <class B>
RegularizationChain<typename B::Space> regularize(const B& b, const typename B::Space& v) {
  using S = typename B::Space;
  std::vector<ChainStep<S>> steps;
  std::size_t stabilized_at = 0;
  auto push = [&](S x) {
    S n = b.nr(x);
    const auto dv = b.dim(x);
    const auto dn = b.dim(n);
    steps.push_back({std::move(x), std::move(n), dv, dn});
  };
  push(v);
  const auto limit = static_cast<std::size_t>(b.dim(b.whole())) + 1;
  for (std::size_t m = 0;; ++m) {
    if (m > limit) throw VerificationError("regularization did not stabilize");
    S next = b.normalizer(steps[m].nr);
    if (!b.contains(next, steps[m].v)) throw VerificationError("regularization step " + std::to_string(m + 1) + " is not increasing");
    push(std::move(next));
    const auto& prev = steps[m];
    const auto& now = steps[m + 1];
    if (!b.contains(now.nr, prev.nr))
      throw VerificationError("nilpotent ideals decrease at step " + std::to_string(m + 1));
    if (now.v == prev.v) {
      stabilized_at = m;
      break;
    }
    // freeze: equal nilpotent ideals force the next step to repeat
    if (now.nr == prev.nr) {
      push(b.normalizer(now.nr));
      if (!(steps[m + 2].v == steps[m + 1].v)) throw VerificationError("chain moved after nr froze");
      stabilized_at = m + 1;
      break;
    }
  }
  auto result = describe_parabolic(b, steps[stabilized_at].v);
  return {std::move(steps), stabilized_at, std::move(result)};
}

inline RegularizationChain<RegularSubalgebra> regularize_regular(const RegularBackend& b, const RegularSubalgebra& v) {
  return regularize(b, v);
}

inline RegularizationChain<Subalg> regularize_matrix(const MatrixBackend& b, const Subalg& v) {
  if (!v.is_bracket_closed()) throw DimensionError("regularize: input is not a subalgebra");
  return regularize(b, v);
}

/// Root-set form of a certified regular parabolic.
ParabolicRootSet to_root_set(const ParabolicDescriptor<RegularSubalgebra>& d);

}  // namespace crlie
