#include "crlie/rootsys/regular.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

namespace crlie {

using Q = GaussRational;
using Space = Subspace<Q>;

ParabolicRootSet ParabolicRootSet::from_mask(const RootSystem& sys, const RootMask& q) {
  const RootMask neg = sys.negate(q);
  return {q, q & ~neg, q & neg};
}

RegularSubalgebra::RegularSubalgebra(const RootSystem& sys, Space toral, RootMask roots)
    : sys_(&sys), toral_(std::move(toral)), roots_(roots) {
  if (toral_.ambient_dim() != sys.coord_dim())
    throw DimensionError("toral subspace does not live in the Cartan coordinates of " + sys.name());
  if ((roots_ & ~sys.all()).any()) throw RootSystemError("root mask refers to indices outside " + sys.name());
}

RegularSubalgebra RegularSubalgebra::zero(const RootSystem& sys) { return {sys, Space::zero(sys.coord_dim()), {}}; }

RegularSubalgebra RegularSubalgebra::whole(const RootSystem& sys) { return {sys, sys.full_cartan(), sys.all()}; }

RegularSubalgebra RegularSubalgebra::with_cartan(const RootSystem& sys, RootMask roots) {
  return {sys, sys.full_cartan(), roots};
}

RegularSubalgebra RegularSubalgebra::from_parabolic(const RootSystem& sys, const ParabolicRootSet& p) {
  return with_cartan(sys, p.q);
}

bool RegularSubalgebra::is_subalgebra() const {
  if (!sys_->full_cartan().contains(toral_)) return false;
  if (!is_closed(*sys_, roots_)) return false;
  for (int i : sys_->members(roots_))
    if (roots_.test(static_cast<std::size_t>(sys_->negative(i))) && !toral_.contains(sys_->coroot(i))) return false;
  return true;
}

RegularSubalgebra RegularSubalgebra::conj() const { return {*sys_, toral_.conj(), sys_->negate(roots_)}; }

bool RegularSubalgebra::contains(const RegularSubalgebra& o) const {
  return (o.roots_ & ~roots_).none() && toral_.contains(o.toral_);
}

RegularSubalgebra meet(const RegularSubalgebra& a, const RegularSubalgebra& b) {
  return {a.system(), intersection(a.toral(), b.toral()), a.roots() & b.roots()};
}

RegularSubalgebra join(const RegularSubalgebra& a, const RegularSubalgebra& b) {
  return {a.system(), sum(a.toral(), b.toral()), a.roots() | b.roots()};
}

bool is_closed(const RootSystem& sys, const RootMask& s) {
  const auto m = sys.members(s);
  for (int a : m)
    for (int b : m) {
      const int c = sys.sum(a, b);
      if (c >= 0 && !s.test(static_cast<std::size_t>(c))) return false;
    }
  return true;
}

RootMask closed_closure(const RootSystem& sys, const RootMask& s) {
  RootMask out = s;
  std::vector<int> list = sys.members(s);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const int x = list[k];
    for (std::size_t j = 0; j <= k; ++j) {
      const int c = sys.sum(x, list[j]);
      if (c >= 0 && !out.test(static_cast<std::size_t>(c))) {
        out.set(static_cast<std::size_t>(c));
        list.push_back(c);
      }
    }
  }
  return out;
}

bool is_parabolic(const RootSystem& sys, const RootMask& q) {
  return (q | sys.negate(q)) == sys.all() && is_closed(sys, q);
}

ParabolicRootSet parabolic_from_grading(const RootSystem& sys, const std::vector<mpq_class>& grading) {
  if (static_cast<int>(grading.size()) != sys.coord_dim())
    throw DimensionError("grading covector needs " + std::to_string(sys.coord_dim()) + " coordinates");
  RootMask q;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    mpq_class v = 0;
    const Root& r = sys.root(static_cast<int>(i));
    for (std::size_t k = 0; k < r.size(); ++k)
      if (r[k] != 0) v += r[k] * grading[k];
    if (sgn(v) >= 0) q.set(i);
  }
  return ParabolicRootSet::from_mask(sys, q);
}

namespace {

void check_crosses(const RootSystem& sys, const std::vector<int>& crosses) {
  for (int c : crosses)
    if (c < 1 || c > sys.rank())
      throw RootSystemError("cross index " + std::to_string(c) + " outside 1.." + std::to_string(sys.rank()));
}

}  // namespace

ParabolicRootSet parabolic_from_crosses(const RootSystem& sys, const std::vector<int>& crosses) {
  check_crosses(sys, crosses);
  RootMask q;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto& c = sys.simple_coefficients(static_cast<int>(i));
    bool keep = true;
    for (int x : crosses)
      if (c[static_cast<std::size_t>(x - 1)] < 0) keep = false;
    if (keep) q.set(i);
  }
  return ParabolicRootSet::from_mask(sys, q);
}

std::vector<mpq_class> crosses_grading(const RootSystem& sys, const std::vector<int>& crosses) {
  check_crosses(sys, crosses);
  const int m = sys.coord_dim();
  DenseMatrix a = zeros<Q>(m, m);
  Vector rhs = zero_vector<Q>(m);
  for (int k = 0; k < sys.rank(); ++k) {
    const Root& s = sys.root(sys.simple()[static_cast<std::size_t>(k)]);
    for (int c = 0; c < m; ++c) a(k, c) = Q(s[static_cast<std::size_t>(c)]);
  }
  for (int x : crosses) rhs(x - 1) = Q(1);
  if (m > sys.rank())
    for (int c = 0; c < m; ++c) a(m - 1, c) = Q(1);
  auto inv = inverse(a);
  if (!inv) throw std::logic_error("simple roots do not determine a grading");
  Vector h = *inv * rhs;
  std::vector<mpq_class> out;
  for (int c = 0; c < m; ++c) out.push_back(h(c).re());
  return out;
}

NrLevi nr_and_levi(const RegularSubalgebra& v) {
  const RootSystem& sys = v.system();
  const RootMask neg = sys.negate(v.roots());
  return {v.roots() & ~neg, RegularSubalgebra(sys, v.toral(), v.roots() & neg)};
}

RegularSubalgebra normalizer(const RegularSubalgebra& v) {
  const RootSystem& sys = v.system();
  const auto vs = sys.members(v.roots());
  RootMask out;
  for (std::size_t b = 0; b < sys.size(); ++b) {
    const int beta = static_cast<int>(b);
    if (!v.roots().test(b) && !sys.vanishes_on(beta, v.toral())) continue;
    if (v.roots().test(static_cast<std::size_t>(sys.negative(beta))) && !v.toral().contains(sys.coroot(beta))) continue;
    bool ok = true;
    for (int alpha : vs) {
      const int s = sys.sum(alpha, beta);
      if (s >= 0 && !v.roots().test(static_cast<std::size_t>(s))) {
        ok = false;
        break;
      }
    }
    if (ok) out.set(b);
  }
  return RegularSubalgebra::with_cartan(sys, out);
}

RegularSubalgebra normalizer_regular(const RootSystem& sys, const RootMask& n) {
  if ((n & sys.negate(n)).any()) throw RootSystemError("normalizer_regular: root set meets its negative");
  if (!is_closed(sys, n)) throw RootSystemError("normalizer_regular: root set is not closed");
  return normalizer(RegularSubalgebra(sys, Space::zero(sys.coord_dim()), n));
}

RegularSubalgebra lie_closure_regular(const RegularSubalgebra& v) {
  const RootSystem& sys = v.system();
  const RootMask roots = closed_closure(sys, v.roots());
  std::vector<Vector> toral = v.toral().vectors();
  for (int i : sys.members(roots & sys.negate(roots)))
    if (sys.is_positive(i)) toral.push_back(sys.coroot(i));
  return {sys, Space::span(sys.coord_dim(), toral), roots};
}

RegularSubalgebra module_closure_regular(const RegularSubalgebra& x, const RegularSubalgebra& l) {
  const RootSystem& sys = x.system();
  RootMask roots = x.roots();
  Space toral = x.toral();
  const auto ls = sys.members(l.roots());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int beta : ls) {
      if (!roots.test(static_cast<std::size_t>(beta)) && !sys.vanishes_on(beta, toral)) {
        roots.set(static_cast<std::size_t>(beta));
        grew = true;
      }
      for (int alpha : sys.members(roots)) {
        if (alpha == sys.negative(beta)) {
          if (!toral.contains(sys.coroot(beta))) {
            toral = sum(toral, Space::span(sys.coord_dim(), std::vector<Vector>{sys.coroot(beta)}));
            grew = true;
          }
          continue;
        }
        const int s = sys.sum(alpha, beta);
        if (s >= 0 && !roots.test(static_cast<std::size_t>(s))) {
          roots.set(static_cast<std::size_t>(s));
          grew = true;
        }
      }
    }
  }
  return {sys, toral, roots};
}

std::vector<ParabolicRootSet> enumerate_parabolics(const RootSystem& sys, int rank_cap) {
  if (sys.rank() > rank_cap)
    throw RootSystemError("rank " + std::to_string(sys.rank()) + " exceeds the enumeration cap " + std::to_string(rank_cap));
  std::unordered_set<RootMask> seen;
  std::deque<RootMask> queue;
  const int r = sys.rank();
  for (unsigned bits = 0; bits < (1u << r); ++bits) {
    std::vector<int> crosses;
    for (int k = 0; k < r; ++k)
      if (bits & (1u << k)) crosses.push_back(k + 1);
    const RootMask q = parabolic_from_crosses(sys, crosses).q;
    if (seen.insert(q).second) queue.push_back(q);
  }
  while (!queue.empty()) {
    const RootMask q = queue.front();
    queue.pop_front();
    for (int s : sys.simple()) {
      RootMask w = sys.reflect_mask(s, q);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<RootMask> masks(seen.begin(), seen.end());
  std::sort(masks.begin(), masks.end(), mask_less);
  std::vector<ParabolicRootSet> out;
  out.reserve(masks.size());
  for (const auto& m : masks) out.push_back(ParabolicRootSet::from_mask(sys, m));
  return out;
}

std::vector<RootMask> strongly_orthogonal_maximal_sets(const RootSystem& sys, const RootMask& candidates) {
  const auto c = sys.members(candidates);
  const std::size_t n = c.size();
  auto compatible = [&](int a, int b) {
    return a != b && sys.negative(a) != b && sys.sum(a, b) < 0 && sys.sum(a, sys.negative(b)) < 0;
  };
  std::vector<RootMask> out;
  // Bron-Kerbosch over the compatibility graph, indices into c
  std::function<void(std::vector<std::size_t>, std::vector<std::size_t>, std::vector<std::size_t>)> expand =
      [&](std::vector<std::size_t> r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          RootMask m;
          for (auto k : r) m.set(static_cast<std::size_t>(c[k]));
          out.push_back(m);
          return;
        }
        while (!p.empty()) {
          const std::size_t v = p.back();
          p.pop_back();
          std::vector<std::size_t> p2, x2;
          for (auto u : p)
            if (compatible(c[u], c[v])) p2.push_back(u);
          for (auto u : x)
            if (compatible(c[u], c[v])) x2.push_back(u);
          auto r2 = r;
          r2.push_back(v);
          expand(r2, p2, x2);
          x.push_back(v);
        }
      };
  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = k;
  if (n > 0) expand({}, all, {});
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

bool weyl_conjugate(const RootSystem& sys, const RootMask& a, const RootMask& b) {
  if (a.count() != b.count()) return false;
  std::unordered_set<RootMask> seen{a};
  std::deque<RootMask> queue{a};
  while (!queue.empty()) {
    const RootMask m = queue.front();
    queue.pop_front();
    if (m == b) return true;
    for (int s : sys.simple()) {
      RootMask w = sys.reflect_mask(s, m);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return false;
}

bool mask_less(const RootMask& a, const RootMask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.test(i) == b.test(i)) continue;
    return a.test(i);
  }
  return false;
}

}  // namespace crlie
