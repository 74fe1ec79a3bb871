#include "crlie/fibration/fibration.hpp"

#include <algorithm>
#include <map>

namespace crlie {

namespace {

bool subset(const RootMask& a, const RootMask& b) { return (a & ~b).none(); }

std::vector<ParabolicRootSet> par_candidates(const RegularSubalgebra& v, const std::optional<RootMask>& within, int rank_cap) {
  const RootSystem& sys = v.system();
  const RootMask vn = nr_and_levi(v).nr;
  std::vector<ParabolicRootSet> out;
  for (const auto& p : enumerate_parabolics(sys, rank_cap)) {
    if (!subset(v.roots(), p.q) || (vn & p.qr).any()) continue;
    if (within && !subset(*within, p.q)) continue;
    out.push_back(p);
  }
  return out;
}

std::vector<ParabolicRootSet> extremal(std::vector<ParabolicRootSet> cands, bool maximal) {
  std::vector<ParabolicRootSet> out;
  for (const auto& p : cands) {
    bool beaten = false;
    for (const auto& o : cands) {
      if (o.q == p.q) continue;
      if (maximal ? subset(p.q, o.q) : subset(o.q, p.q)) beaten = true;
    }
    if (!beaten) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return mask_less(a.q, b.q); });
  return out;
}

}  // namespace

std::vector<ParabolicRootSet> maximal_par(const RegularSubalgebra& v, const std::optional<RootMask>& within, int rank_cap) {
  if (!v.is_subalgebra()) throw DimensionError("maximal_par: v is not a subalgebra");
  return extremal(par_candidates(v, within, rank_cap), true);
}

std::vector<ParabolicRootSet> minimal_par(const RegularSubalgebra& v, int rank_cap) {
  if (!v.is_subalgebra()) throw DimensionError("minimal_par: v is not a subalgebra");
  auto out = extremal(par_candidates(v, std::nullopt, rank_cap), false);
  const RootSystem& sys = v.system();
  const RootMask vn = nr_and_levi(v).nr;
  for (const auto& p : out) {
    if (!subset(vn, p.qn)) throw VerificationError("minimal parabolic whose nilradical misses nr(v)");
    if (!weyl_conjugate(sys, out.front().qr, p.qr)) throw VerificationError("minimal parabolics with non-conjugate Levis");
  }
  return out;
}

ZRootDecomposition z_root_decomposition(const RootSystem& sys, const ParabolicRootSet& p) {
  if (!is_parabolic(sys, p.q)) throw DimensionError("z-roots need a parabolic root set");
  Subspace<GaussRational> z = sys.full_cartan();
  for (int a : sys.members(p.qr)) z = intersection(z, kernel(DenseMatrix(sys.coroot(a).transpose())));

  auto restrict = [&](int a) {
    std::vector<mpq_class> r;
    for (const auto& h : z.vectors()) r.push_back(sys.evaluate(a, h).re());
    return r;
  };
  std::map<std::vector<mpq_class>, RootMask> groups;
  for (int a : sys.members(sys.all() & ~p.qr)) groups[restrict(a)].set(static_cast<std::size_t>(a));

  ZRootDecomposition out{z, {}, {}};
  std::vector<ZRoot> pos;
  std::vector<ZRoot> neg;
  for (const auto& [r, mask] : groups) {
    const bool positive = subset(mask, p.qn);
    if (!positive && !subset(mask, sys.negate(p.qn))) throw VerificationError("z-root component straddles q and its opposite");
    (positive ? pos : neg).push_back({r, {}, mask, positive});
  }

  // simple: not a sum of two positive z-roots
  auto add = [](const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    std::vector<mpq_class> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
  };
  std::vector<std::size_t> simple;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    bool sum = false;
    for (std::size_t j = 0; j < pos.size() && !sum; ++j)
      for (std::size_t k = j; k < pos.size() && !sum; ++k)
        if (add(pos[j].restriction, pos[k].restriction) == pos[i].restriction) sum = true;
    if (!sum) simple.push_back(i);
  }
  std::sort(simple.begin(), simple.end(), [&](std::size_t a, std::size_t b) { return mask_less(pos[a].component, pos[b].component); });

  // coordinates in the simple z-roots (linearly independent)
  const auto dz = static_cast<Eigen::Index>(z.dim());
  const auto ns = static_cast<Eigen::Index>(simple.size());
  std::vector<Vector> cols;
  for (std::size_t s : simple) {
    Vector c(dz);
    for (Eigen::Index k = 0; k < dz; ++k) c(k) = GaussRational(pos[s].restriction[static_cast<std::size_t>(k)]);
    cols.push_back(c);
  }
  auto span = Subspace<GaussRational>::span(dz, cols);
  if (span.dim() != ns) throw VerificationError("simple z-roots are dependent");
  auto coefficients = [&](const std::vector<mpq_class>& r) {
    DenseMatrix m(dz, ns + 1);
    for (Eigen::Index j = 0; j < ns; ++j) m.col(j) = cols[static_cast<std::size_t>(j)];
    for (Eigen::Index k = 0; k < dz; ++k) m(k, ns) = GaussRational(r[static_cast<std::size_t>(k)]);
    auto dep = kernel(m);
    if (dep.dim() != 1) throw VerificationError("z-root outside the lattice of simple z-roots");
    Vector d = dep.vector(0);
    std::vector<int> out;
    for (Eigen::Index j = 0; j < ns; ++j) {
      GaussRational c = -d(j) / d(ns);
      if (!c.is_real() || c.re().get_den() != 1) throw VerificationError("non-integral z-root coefficient");
      out.push_back(static_cast<int>(c.re().get_num().get_si()));
    }
    return out;
  };
  for (auto* list : {&pos, &neg})
    for (auto& zr : *list) zr.coefficients = coefficients(zr.restriction);
  for (const auto& zr : pos)
    for (int c : zr.coefficients)
      if (c < 0) throw VerificationError("positive z-root with a negative coefficient");

  auto order = [](const ZRoot& a, const ZRoot& b) {
    int ha = 0;
    int hb = 0;
    for (int c : a.coefficients) ha += std::abs(c);
    for (int c : b.coefficients) hb += std::abs(c);
    if (ha != hb) return ha < hb;
    return a.coefficients > b.coefficients;
  };
  std::vector<ZRoot> sorted_pos = pos;
  std::sort(sorted_pos.begin(), sorted_pos.end(), order);
  std::sort(neg.begin(), neg.end(), order);
  for (std::size_t s : simple) {
    const auto it = std::find_if(sorted_pos.begin(), sorted_pos.end(), [&](const ZRoot& zr) { return zr.component == pos[s].component; });
    out.simple.push_back(static_cast<std::size_t>(it - sorted_pos.begin()));
  }
  out.zroots = std::move(sorted_pos);
  out.zroots.insert(out.zroots.end(), neg.begin(), neg.end());
  return out;
}

std::string zroot_label(const ZRoot& z) {
  std::string out;
  for (std::size_t i = 0; i < z.coefficients.size(); ++i) {
    int c = z.coefficients[i];
    if (c == 0) continue;
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!out.empty()) {
      out += "+";
    }
    if (c != 1) out += std::to_string(c);
    out += "nu" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace crlie
