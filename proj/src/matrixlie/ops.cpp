#include "crlie/matrixlie/ops.hpp"

#include <map>
#include <random>

namespace crlie {

using Q = GaussRational;

namespace {

Subalg make(const Subalg& like, Space s) { return {like.ambient_ptr(), std::move(s)}; }

/// Kernel of the map c -> sum_i c_i images[i], pulled back along a basis.
Space combine_kernel(const Space& basis_space, Eigen::Index image_dim, const std::vector<Vector>& images) {
  Space deps = dependency_space(image_dim, images);
  std::vector<Vector> out;
  for (const auto& c : deps.vectors()) out.push_back(basis_space.combine(c));
  return Space::span(basis_space.ambient_dim(), out);
}

}  // namespace

Subalg bracket_closure(const Subalg& s) {
  const AmbientAlgebra& amb = s.ambient();
  EchelonBuilder<Q> b(amb.dim());
  std::vector<Vector> elems;
  for (const auto& v : s.vectors())
    if (b.insert(v)) elems.push_back(v);
  for (std::size_t i = 0; i < elems.size() && !b.full(); ++i)
    for (std::size_t j = 0; j < i && !b.full(); ++j) {
      Vector c = amb.bracket(elems[i], elems[j]);
      if (b.insert(c)) elems.push_back(std::move(c));
    }
  return make(s, b.finish());
}

Subalg bracket_closure(std::shared_ptr<const AmbientAlgebra> ambient, const std::vector<DenseMatrix>& generators) {
  return bracket_closure(Subalg::span(std::move(ambient), generators));
}

Subalg module_closure(const Subalg& x, const Subalg& l) {
  const AmbientAlgebra& amb = x.ambient();
  EchelonBuilder<Q> b(amb.dim());
  std::vector<Vector> elems;
  for (const auto& v : x.vectors())
    if (b.insert(v)) elems.push_back(v);
  for (std::size_t i = 0; i < elems.size() && !b.full(); ++i)
    for (const auto& g : l.vectors()) {
      Vector c = amb.bracket(g, elems[i]);
      if (b.insert(c)) elems.push_back(std::move(c));
    }
  return make(x, b.finish());
}

Subalg bracket_space(const Subalg& a, const Subalg& b) {
  const AmbientAlgebra& amb = a.ambient();
  EchelonBuilder<Q> e(amb.dim());
  for (const auto& x : a.vectors())
    for (const auto& y : b.vectors()) {
      if (e.full()) break;
      e.insert(amb.bracket(x, y));
    }
  return make(a, e.finish());
}

Subalg derived(const Subalg& v) { return bracket_space(v, v); }

bool is_abelian(const Subalg& v) { return derived(v).dim() == 0; }

bool is_solvable(const Subalg& v) {
  Subalg cur = v;
  while (cur.dim() > 0) {
    Subalg next = derived(cur);
    if (next.dim() == cur.dim()) return false;
    cur = std::move(next);
  }
  return true;
}

Subalg normalizer(const Subalg& target) {
  const AmbientAlgebra& amb = target.ambient();
  const Eigen::Index d = amb.dim();
  const Eigen::Index t = target.dim();
  if (t == 0 || t == d) return Subalg::whole(target.ambient_ptr());
  DenseMatrix m = zeros<Q>(t * d, d);
  for (Eigen::Index l = 0; l < t; ++l) {
    const Vector& tl = target.space().vector(l);
    for (Eigen::Index i = 0; i < d; ++i) {
      Vector r = target.space().residual(amb.bracket(amb.unit(i), tl));
      for (Eigen::Index k = 0; k < d; ++k)
        if (!r(k).is_zero()) m(l * d + k, i) = r(k);
    }
  }
  return make(target, kernel(m));
}

Subalg centralizer(const Subalg& s) {
  const AmbientAlgebra& amb = s.ambient();
  const Eigen::Index d = amb.dim();
  const Eigen::Index t = s.dim();
  if (t == 0) return Subalg::whole(s.ambient_ptr());
  DenseMatrix m = zeros<Q>(t * d, d);
  for (Eigen::Index l = 0; l < t; ++l) {
    const Vector& sl = s.space().vector(l);
    for (Eigen::Index i = 0; i < d; ++i) {
      Vector r = amb.bracket(amb.unit(i), sl);
      for (Eigen::Index k = 0; k < d; ++k)
        if (!r(k).is_zero()) m(l * d + k, i) = r(k);
    }
  }
  return make(s, kernel(m));
}

Subalg centralizer(std::shared_ptr<const AmbientAlgebra> ambient, const DenseMatrix& x) {
  return centralizer(Subalg::span(std::move(ambient), {x}));
}

Subalg centralizer_within(const Subalg& c, const Vector& x) {
  const AmbientAlgebra& amb = c.ambient();
  std::vector<Vector> images;
  for (const auto& v : c.vectors()) images.push_back(amb.bracket(v, x));
  return make(c, combine_kernel(c.space(), amb.dim(), images));
}

namespace {

/// ad of each basis vector of v on v, in v's RREF coordinates.
std::vector<DenseMatrix> adjoint_in(const Subalg& v) {
  const AmbientAlgebra& amb = v.ambient();
  const Eigen::Index d = v.dim();
  std::vector<DenseMatrix> ads;
  for (Eigen::Index a = 0; a < d; ++a) {
    DenseMatrix ad = zeros<Q>(d, d);
    for (Eigen::Index b = 0; b < d; ++b) {
      auto c = v.space().coordinates(amb.bracket(v.space().vector(a), v.space().vector(b)));
      if (!c) throw VerificationError("radical: input is not closed under brackets");
      ad.col(b) = *c;
    }
    ads.push_back(std::move(ad));
  }
  return ads;
}

}  // namespace

Subalg radical(const Subalg& v) {
  const Eigen::Index d = v.dim();
  if (d == 0) return v;
  const auto ads = adjoint_in(v);
  DenseMatrix kappa(d, d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = a; b < d; ++b) {
      kappa(a, b) = trace_of_product(ads[static_cast<std::size_t>(a)], ads[static_cast<std::size_t>(b)]);
      kappa(b, a) = kappa(a, b);
    }
  Subalg dv = derived(v);
  std::vector<Vector> rows;
  for (const auto& y : dv.vectors()) {
    Vector yc = *v.space().coordinates(y);
    rows.push_back(kappa * yc);
  }
  DenseMatrix m = zeros<Q>(static_cast<Eigen::Index>(rows.size()), d);
  for (std::size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  Space sol = kernel(m);
  std::vector<Vector> out;
  for (const auto& c : sol.vectors()) out.push_back(v.space().combine(c));
  Subalg rad = make(v, Space::span(v.ambient().dim(), out));
  if (!is_solvable(rad)) throw VerificationError("radical: Killing-form complement is not solvable");
  return rad;
}

Subalg nilradical_nr(const Subalg& v) {
  const AmbientAlgebra& amb = v.ambient();
  const Eigen::Index n = amb.n();
  Subalg rad = radical(v);
  const auto gens = rad.matrices();

  // associative envelope of rad(v) and the identity
  EchelonBuilder<Q> env(n * n);
  std::vector<DenseMatrix> elems;
  auto add = [&](DenseMatrix m) {
    if (env.insert(flatten(m))) elems.push_back(std::move(m));
  };
  add(identity<Q>(n));
  for (const auto& g : gens) add(g);
  for (std::size_t i = 0; i < elems.size() && !env.full(); ++i)
    for (const auto& g : gens) add(multiply(elems[i], g));

  // nilpotent elements of rad(v) = rad(v) ∩ Jacobson radical of the envelope
  const Eigen::Index r = rad.dim();
  DenseMatrix cond = zeros<Q>(static_cast<Eigen::Index>(elems.size()), r);
  for (std::size_t b = 0; b < elems.size(); ++b)
    for (Eigen::Index a = 0; a < r; ++a)
      cond(static_cast<Eigen::Index>(b), a) = trace_of_product(gens[static_cast<std::size_t>(a)], elems[b]);
  Space sol = kernel(cond);
  std::vector<Vector> out;
  for (const auto& c : sol.vectors()) out.push_back(rad.space().combine(c));
  Subalg nr = make(v, Space::span(amb.dim(), out));

  for (const auto& x : nr.matrices())
    if (!is_nilpotent_matrix(x)) throw VerificationError("nr: basis element is not a nilpotent matrix");
  for (const auto& x : v.vectors())
    for (const auto& y : nr.vectors())
      if (!nr.contains(amb.bracket(x, y))) throw VerificationError("nr: not an ideal of v");
  if (!nr.contains(meet(rad, derived(v))))
    throw VerificationError("nr: misses part of the nilpotent radical [v,v] ∩ rad(v)");
  return nr;
}

JCDecomposition jordan_chevalley(const DenseMatrix& x) {
  if (x.rows() != x.cols()) throw DimensionError("jordan_chevalley: matrix not square");
  const Eigen::Index n = x.rows();
  const Polynomial<Q> mp = min_poly(x);
  const Polynomial<Q> f = squarefree_part(mp);
  const Polynomial<Q> df = f.derivative();
  DenseMatrix s = x;
  for (int iter = 0; iter < 64; ++iter) {
    DenseMatrix fs = f.evaluate(s);
    if (is_zero(fs)) break;
    auto inv = inverse(df.evaluate(s));
    if (!inv) throw VerificationError("jordan_chevalley: f'(S) is singular");
    s = s - multiply(fs, *inv);
  }
  DenseMatrix nil = x - s;
  if (!is_zero(f.evaluate(s))) throw VerificationError("jordan_chevalley: Newton iteration did not converge");
  if (!is_zero(commutator(s, nil))) throw VerificationError("jordan_chevalley: parts do not commute");
  if (!is_nilpotent_matrix(nil)) throw VerificationError("jordan_chevalley: nilpotent part is not nilpotent");
  const Polynomial<Q> ms = min_poly(s);
  if (squarefree_part(ms) != ms) throw VerificationError("jordan_chevalley: semisimple part has repeated roots");
  // X_s must be a polynomial in X
  std::vector<Vector> powers;
  DenseMatrix p = identity<Q>(n);
  for (int k = 0; k < mp.degree(); ++k) {
    powers.push_back(flatten(p));
    p = multiply(p, x);
  }
  if (!Space::span(n * n, powers).contains(flatten(s)))
    throw VerificationError("jordan_chevalley: semisimple part is not a polynomial in X");
  return {std::move(s), std::move(nil)};
}

namespace {

Vector random_combination(const Subalg& v, std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> coef(-spread, spread);
  Vector c(v.dim());
  for (Eigen::Index k = 0; k < v.dim(); ++k) c(k) = Q(mpq_class(coef(rng)), mpq_class(coef(rng)));
  return v.space().combine(c);
}

}  // namespace

SplittableEvidence splittable_evidence(const Subalg& v, int trials, std::uint64_t seed) {
  SplittableEvidence ev;
  ev.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<Vector> samples = v.vectors();
  for (int t = 0; t < trials; ++t) samples.push_back(random_combination(v, rng, 3));
  for (const auto& x : samples) {
    const DenseMatrix m = v.ambient().matrix(x);
    JCDecomposition jc = jordan_chevalley(m);
    ++ev.checked;
    if (!v.contains_matrix(jc.semisimple) || !v.contains_matrix(jc.nilpotent)) {
      ev.pass = false;
      ev.witness = m;
      ev.detail = "Jordan-Chevalley parts of the witness leave the subalgebra";
      return ev;
    }
  }
  return ev;
}

Subalg maximal_torus(const Subalg& c, std::uint64_t seed) {
  if (conj(c) != c) throw VerificationError("maximal_torus: subalgebra is not conjugation stable");
  if (c.dim() == 0 || is_abelian(c)) return c;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vector y = random_combination(c, rng, 4 + 4 * attempt);
    Vector x = y + c.ambient().sigma(y);
    Subalg t = centralizer_within(c, x);
    if (is_abelian(t)) return t;
  }
  throw VerificationError("maximal_torus: no regular element found within the retry budget");
}

Eigen::Index rank_of(const Subalg& c, std::uint64_t seed) { return maximal_torus(c, seed).dim(); }

DenseMatrix adjoint_matrix(const AmbientAlgebra& amb, const Vector& x) {
  const Eigen::Index d = amb.dim();
  DenseMatrix ad(d, d);
  for (Eigen::Index j = 0; j < d; ++j) ad.col(j) = amb.bracket(x, amb.unit(j));
  return ad;
}

Subalg parabolic_from_element(std::shared_ptr<const AmbientAlgebra> ambient, const DenseMatrix& a) {
  const AmbientAlgebra& amb = *ambient;
  const Vector ac = amb.coords(a);
  if (amb.sigma(ac) != ac) throw DimensionError("parabolic_from_element: A is not in the compact form");
  // eigenvalues of A are i*y with y a root of p(i y)
  const Polynomial<Q> p = min_poly(a);
  std::vector<Q> shifted;
  Q ik(1);
  for (const auto& c : p.coeffs()) {
    shifted.push_back(c * ik);
    ik *= Q::i();
  }
  const Polynomial<Q> py = Polynomial<Q>(shifted).monic();
  std::vector<mpq_class> ys;
  try {
    ys = rational_roots(py);
  } catch (const std::domain_error&) {
    throw DimensionError("parabolic_from_element: spectrum of A is not in i*Q");
  }
  if (static_cast<int>(ys.size()) != py.degree())
    throw DimensionError("parabolic_from_element: spectrum of A is not in i*Q");

  std::map<mpq_class, bool> diffs;
  for (const auto& u : ys)
    for (const auto& w : ys) diffs[u - w] = true;
  const DenseMatrix ad = adjoint_matrix(amb, ac);
  const Eigen::Index d = amb.dim();
  Eigen::Index total = 0;
  std::vector<Vector> nonneg;
  for (const auto& [mu, unused] : diffs) {
    DenseMatrix shifted_ad = ad;
    const Q shift = Q(mpq_class(0), mu);
    for (Eigen::Index k = 0; k < d; ++k) shifted_ad(k, k) -= shift;
    Space eig = kernel(shifted_ad);
    total += eig.dim();
    if (sgn(mu) >= 0)
      for (const auto& v : eig.vectors()) nonneg.push_back(v);
  }
  if (total != d) throw VerificationError("parabolic_from_element: ad(A) is not diagonalizable");
  return {std::move(ambient), Space::span(d, nonneg)};
}

}  // namespace crlie
