#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "crlie/crcore/backend.hpp"
#include "crlie/errors.hpp"

namespace crlie {

struct CRDims {
  Eigen::Index cr_dim = 0;
  Eigen::Index cr_codim = 0;
  friend bool operator==(const CRDims&, const CRDims&) = default;
};

template <class S>
struct NReductiveWitness {
  bool holds = false;
  S nr;
  S levi;
};

enum class RegularityType { I, II, III };

inline const char* to_string(RegularityType t) {
  switch (t) {
    case RegularityType::I: return "I";
    case RegularityType::II: return "II";
    default: return "III";
  }
}

/// L(v) = v meet conj(v).
template <class B>
typename B::Space levi_intersection(const B& b, const typename B::Space& v) {
  return b.meet(v, b.conj(v));
}

template <class B>
CRDims cr_dims(const B& b, const typename B::Space& v) {
  const auto l = levi_intersection(b, v);
  const auto sum = b.join(v, b.conj(v));
  return {b.dim(v) - b.dim(l), b.dim(b.whole()) - b.dim(sum)};
}

/// v = nr(v) + L(v) as a direct sum.
template <class B>
NReductiveWitness<typename B::Space> is_n_reductive(const B& b, const typename B::Space& v) {
  auto nr = b.nr(v);
  auto levi = levi_intersection(b, v);
  const bool direct = b.dim(b.meet(nr, levi)) == 0;
  const bool fills = b.dim(nr) + b.dim(levi) == b.dim(v);
  return {direct && fills, std::move(nr), std::move(levi)};
}

/// v2 strengthens v1: same Levi intersection and v1 inside v2.
template <class B>
bool strengthens(const B& b, const typename B::Space& v1, const typename B::Space& v2) {
  return b.contains(v2, v1) && levi_intersection(b, v1) == levi_intersection(b, v2);
}

/// Rank test on the conjugation stable part of the normalizers of v and L(v).
template <class B>
RegularityType regularity_type(const B& b, const typename B::Space& v) {
  const auto full = b.rank(b.whole());
  if (b.rank(levi_intersection(b, b.normalizer(v))) == full) return RegularityType::I;
  if (b.rank(levi_intersection(b, b.normalizer(levi_intersection(b, v)))) == full) return RegularityType::II;
  return RegularityType::III;
}

/// The pair (k, v) with derived data computed on first use.
template <class B>
class CRAlgebra {
 public:
  using Space = typename B::Space;

  CRAlgebra(B backend, Space v) : backend_(std::move(backend)), v_(std::move(v)), cache_(std::make_shared<Cache>()) {
    if (!backend_.is_subalgebra(v_)) throw DimensionError("CR algebra: v is not a subalgebra");
  }

  const B& backend() const { return backend_; }
  const Space& v() const { return v_; }

  /// Reductive by construction; verified as nr(L(v)) = 0.
  const Space& levi() const {
    std::call_once(cache_->levi_once, [&] {
      Space l = levi_intersection(backend_, v_);
      if (backend_.dim(backend_.nr(l)) != 0) throw VerificationError("v meet conj(v) has a nonzero nilpotent ideal");
      cache_->levi = std::move(l);
    });
    return *cache_->levi;
  }

  const Space& nr() const {
    std::call_once(cache_->nr_once, [&] { cache_->nr = backend_.nr(v_); });
    return *cache_->nr;
  }

  CRDims dims() const { return cr_dims(backend_, v_); }

  bool n_reductive() const {
    const Space& n = nr();
    const Space& l = levi();
    return backend_.dim(backend_.meet(n, l)) == 0 && backend_.dim(n) + backend_.dim(l) == backend_.dim(v_);
  }

  RegularityType regularity() const { return regularity_type(backend_, v_); }

  CRAlgebra conjugate() const { return {backend_, backend_.conj(v_)}; }

 private:
  struct Cache {
    std::once_flag levi_once;
    std::once_flag nr_once;
    std::optional<Space> levi;
    std::optional<Space> nr;
  };

  B backend_;
  Space v_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace crlie
