#include "crlie/realforms/realforms.hpp"

#include <charconv>
#include <sstream>

namespace crlie {

using Q = GaussRational;

namespace {

int parse_int(std::string_view s, const std::string& whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) throw DimensionError("bad real form name: " + whole);
  return v;
}

std::pair<int, int> parse_pair(std::string_view s, const std::string& whole) {
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) throw DimensionError("real form needs p,q: " + whole);
  return {parse_int(s.substr(0, comma), whole), parse_int(s.substr(comma + 1), whole)};
}

constexpr int kMaxSize = 8;

}  // namespace

RealFormSpec RealFormSpec::parse(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw DimensionError("real form name needs a colon: " + name);
  const std::string head = name.substr(0, colon);
  const std::string_view tail = std::string_view(name).substr(colon + 1);
  RealFormSpec s;
  if (head == "su" || head == "so") {
    auto [p, q] = parse_pair(tail, name);
    s = {head == "su" ? FormKind::SU : FormKind::SO, p, q};
  } else if (head == "slH") {
    s = {FormKind::SLH, parse_int(tail, name), 0};
  } else if (head == "compact-su" || head == "compact-u") {
    s = {FormKind::CompactSU, parse_int(tail, name), 0};
  } else if (head == "compact-so") {
    s = {FormKind::CompactSO, parse_int(tail, name), 0};
  } else if (head == "compact-sp") {
    s = {FormKind::CompactSP, parse_int(tail, name), 0};
  } else {
    throw DimensionError("unsupported real form family: " + head);
  }
  const int n = s.n();
  const int min_n = (s.kind == FormKind::SO || s.kind == FormKind::CompactSO) ? 5 : 2;
  if (n < min_n) throw DimensionError("real form too small: " + name);
  if (n > kMaxSize) throw DimensionError("real form exceeds the supported size 8: " + name);
  return s;
}

int RealFormSpec::n() const {
  switch (kind) {
    case FormKind::SU:
    case FormKind::SO: return p + q;
    case FormKind::SLH:
    case FormKind::CompactSP: return 2 * p;
    default: return p;
  }
}

std::string RealFormSpec::name() const {
  switch (kind) {
    case FormKind::SU: return "su:" + std::to_string(p) + "," + std::to_string(q);
    case FormKind::SO: return "so:" + std::to_string(p) + "," + std::to_string(q);
    case FormKind::SLH: return "slH:" + std::to_string(p);
    case FormKind::CompactSU: return "compact-su:" + std::to_string(p);
    case FormKind::CompactSO: return "compact-so:" + std::to_string(p);
    default: return "compact-sp:" + std::to_string(p);
  }
}

const char* to_string(RootKind k) {
  switch (k) {
    case RootKind::Real: return "real";
    case RootKind::ImaginaryCompact: return "compact";
    case RootKind::ImaginaryNoncompact: return "noncompact";
    default: return "complex";
  }
}

DenseMatrix RealForm::theta(const DenseMatrix& x) const {
  if (transpose_type) return DenseMatrix(-(j * x.transpose() * (-j)));  // j^{-1} = -j
  return DenseMatrix(p * x * p);
}

DenseMatrix RealForm::sigma0(const DenseMatrix& x) const { return theta(DenseMatrix(-adjoint_of(x))); }

DenseMatrix RealForm::pi(const DenseMatrix& x) const { return DenseMatrix((x + theta(x)) * Q(1, 2)); }

Space RealForm::k_flat() const { return k->flat(); }

namespace {

/// Swap i <-> n-1-i for i < s.
DenseMatrix partial_swap(int n, int s) {
  DenseMatrix p = identity<Q>(n);
  for (int i = 0; i < s; ++i) {
    p(i, i) = Q(0);
    p(n - 1 - i, n - 1 - i) = Q(0);
    p(i, n - 1 - i) = Q(1);
    p(n - 1 - i, i) = Q(1);
  }
  return p;
}

void verify_form(const RealForm& f) {
  const auto& g = *f.g.algebra();
  const auto& label = f.spec.name();
  std::vector<Vector> fixed;
  for (Eigen::Index i = 0; i < g.dim(); ++i) {
    const DenseMatrix& x = g.basis_matrix(i);
    const DenseMatrix tx = f.theta(x);
    if (!g.try_coords(tx)) throw VerificationError(label + ": theta does not preserve g");
    if (f.theta(tx) != x) throw VerificationError(label + ": theta is not an involution");
    const DenseMatrix star = -adjoint_of(x);
    if (f.theta(star) != DenseMatrix(-adjoint_of(tx))) throw VerificationError(label + ": theta does not commute with the compact conjugation");
    fixed.push_back(flatten(DenseMatrix(x + tx)));
    // compact form: X - X^* is skew hermitian, tr((X - X^*)^2) <= 0
    DenseMatrix c = x + star;
    Q t = trace(DenseMatrix(c * c));
    if (!t.is_real() || sgn(t.re()) > 0) throw VerificationError(label + ": compact form is not negative definite");
  }
  if (Space::span(g.n() * g.n(), fixed) != f.k->flat()) throw VerificationError(label + ": k is not the theta-fixed part of g");
}

WeightRealization realize_for(const RealFormSpec& s) {
  switch (s.kind) {
    case FormKind::SU:
    case FormKind::CompactSU:
    case FormKind::SLH: return realize_sl(s.n());
    case FormKind::SO:
    case FormKind::CompactSO: return realize_so(s.n());
    default: return realize_sp(s.p);
  }
}

}  // namespace

RealForm build_real_form(const RealFormSpec& spec) {
  const int n = spec.n();
  WeightRealization g = realize_for(spec);
  RealForm f{spec, g, g.algebra(), std::nullopt, identity<Q>(n), zeros<Q>(n, n), false};
  switch (spec.kind) {
    case FormKind::SU:
    case FormKind::SO: {
      const int s = std::min(spec.p, spec.q);
      f.p = partial_swap(n, s);
      f.k = make_commutant("k(" + spec.name() + ")", *g.algebra(), {f.p});
      break;
    }
    case FormKind::SLH: {
      f.transpose_type = true;
      f.j = symplectic_pairs(spec.p);
      f.k_roots = realize_sp(spec.p);
      f.k = f.k_roots->algebra();
      break;
    }
    default:
      f.k_roots = g;
      break;
  }
  verify_form(f);
  return f;
}

RootMask RootClassification::apply(const std::vector<int>& map, const RootMask& m) const {
  RootMask out;
  for (std::size_t i = 0; i < map.size(); ++i)
    if (m.test(i)) out.set(static_cast<std::size_t>(map[i]));
  return out;
}

namespace {

/// Root whose root space contains the matrix.
int root_of(const WeightRealization& g, const DenseMatrix& x) {
  const auto& w = g.weights();
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      if (x(r, c).is_zero()) continue;
      Root a(w[static_cast<std::size_t>(r)].size());
      for (std::size_t k = 0; k < a.size(); ++k) a[k] = w[static_cast<std::size_t>(r)][k] - w[static_cast<std::size_t>(c)][k];
      const int idx = g.roots().index_of(a);
      if (idx < 0 || !g.entry_space(idx).contains(flatten(x))) throw VerificationError("image of a root vector is not a root vector");
      return idx;
    }
  throw VerificationError("image of a root vector vanished");
}

}  // namespace

RootClassification classify_roots(const RealForm& form) {
  const auto& g = form.g;
  const auto& sys = g.roots();
  const auto& amb = *g.algebra();
  RootClassification rc;
  for (std::size_t a = 0; a < sys.size(); ++a) {
    const DenseMatrix x = amb.matrix(g.root_vector(static_cast<int>(a)));
    const int s = root_of(g, form.sigma0(x));
    const DenseMatrix tx = form.theta(x);
    const int t = root_of(g, tx);
    if (t != sys.negative(s)) throw VerificationError("theta* differs from -sigma* on " + sys.format(static_cast<int>(a)));
    rc.sigma_star.push_back(s);
    rc.theta_star.push_back(t);
    RootKind kind = RootKind::Complex;
    if (s == static_cast<int>(a)) {
      kind = RootKind::Real;
    } else if (s == sys.negative(static_cast<int>(a))) {
      if (tx == x)
        kind = RootKind::ImaginaryCompact;
      else if (tx == DenseMatrix(-x))
        kind = RootKind::ImaginaryNoncompact;
      else
        throw VerificationError("imaginary root space is neither in k nor in p");
    }
    rc.kind.push_back(kind);
    RootMask* target = kind == RootKind::Real ? &rc.real
                       : kind == RootKind::ImaginaryCompact ? &rc.compact
                       : kind == RootKind::ImaginaryNoncompact ? &rc.noncompact
                                                               : &rc.complex_roots;
    target->set(a);
  }
  for (int a : sys.members(sys.positive() & rc.complex_roots))
    if (!sys.is_positive(rc.sigma_star[static_cast<std::size_t>(a)]))
      throw VerificationError("standard positive system is not compatible with the conjugation");
  return rc;
}

SatakeData satake_data(const RealForm& form, const RootClassification& rc) {
  const auto& sys = form.roots();
  SatakeData d;
  const auto& simple = sys.simple();
  std::vector<bool> black(simple.size(), false);
  for (std::size_t i = 0; i < simple.size(); ++i)
    if (rc.compact.test(static_cast<std::size_t>(simple[i]))) {
      black[i] = true;
      d.black.push_back(static_cast<int>(i) + 1);
    }
  for (std::size_t i = 0; i < simple.size(); ++i) {
    if (black[i]) continue;
    // sigma*(alpha_i) = alpha_j + (black roots)
    const auto& c = sys.simple_coefficients(rc.sigma_star[static_cast<std::size_t>(simple[i])]);
    for (std::size_t j = i + 1; j < simple.size(); ++j)
      if (!black[j] && c[j] == 1) {
        bool rest_black = true;
        for (std::size_t k = 0; k < simple.size(); ++k)
          if (k != j && c[k] != 0 && !black[k]) rest_black = false;
        if (rest_black) d.arrows.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
      }
  }
  return d;
}

ThetaSets theta_sets(const RealForm& form, const RootClassification& rc, const std::vector<int>& crosses) {
  const auto& sys = form.roots();
  const auto par = parabolic_from_crosses(sys, crosses);
  ThetaSets t;
  t.f = par.q;
  t.fn = par.qn;
  t.fr = par.qr;
  t.f_star = t.f & ~rc.noncompact;
  t.f_theta = t.f_star & rc.apply(rc.theta_star, t.f_star);
  t.f_theta_n = t.f_theta & t.fn;
  t.f_theta_r = t.fr & rc.apply(rc.theta_star, t.fr);
  for (const auto* m : {&t.f_theta, &t.f_theta_n, &t.f_theta_r})
    if (!is_closed(sys, *m)) throw VerificationError("theta set of " + form.spec.name() + " is not closed");
  return t;
}

MinimalOrbit build_minimal_orbit(const RealForm& form, const RootClassification& rc, const std::vector<int>& crosses) {
  const auto& g = form.g;
  const auto& sys = g.roots();
  const auto& amb = *g.algebra();
  const auto& k = form.k;
  const Eigen::Index nn = amb.n() * amb.n();
  ThetaSets sets = theta_sets(form, rc, crosses);

  const Subalg cartan = g.cartan();
  std::vector<Vector> fv;
  for (const auto& h : cartan.vectors()) fv.push_back(flatten(amb.matrix(h)));
  for (int a : sys.members(sets.f)) fv.push_back(flatten(amb.matrix(g.root_vector(a))));
  Space f = Space::span(nn, fv);

  Subalg v_matrix(k, k->from_flat(intersection(f, k->flat())));

  // h+ : theta-fixed part of the Cartan
  std::vector<DenseMatrix> hp;
  for (const auto& h : cartan.vectors()) {
    DenseMatrix x = form.pi(amb.matrix(h));
    if (!is_zero(x)) hp.push_back(x);
  }
  Subalg h_plus = Subalg::span(k, hp);
  auto pi_span = [&](const RootMask& m) {
    std::vector<DenseMatrix> out;
    for (int a : sys.members(m)) {
      DenseMatrix x = form.pi(amb.matrix(g.root_vector(a)));
      if (!is_zero(x)) out.push_back(x);
    }
    return Subalg::span(k, out);
  };

  // projection facts
  for (std::size_t a = 0; a < sys.size(); ++a) {
    const DenseMatrix x = form.pi(amb.matrix(g.root_vector(static_cast<int>(a))));
    const int partner = rc.theta_star[a];
    const DenseMatrix y = form.pi(amb.matrix(g.root_vector(partner)));
    if (Subalg::span(k, {x}) != Subalg::span(k, {y})) throw VerificationError("pi(g^a) differs from pi(g^-conj a)");
    if (rc.noncompact.test(a) != is_zero(x)) throw VerificationError("pi vanishes exactly on noncompact roots fails");
  }

  Subalg v_roots = join(h_plus, pi_span(sets.f_theta));
  if (v_roots != v_matrix) throw VerificationError(form.spec.name() + ": f meet k differs from the root formula");
  Subalg nr_roots = pi_span(sets.f_theta_n);
  Subalg nr_matrix = nilradical_nr(v_matrix);
  if (nr_roots != nr_matrix) throw VerificationError(form.spec.name() + ": nr(v) differs from the root formula");
  Subalg levi = join(h_plus, pi_span(sets.f_theta_r));
  if (levi != meet(v_matrix, conj(v_matrix))) throw VerificationError(form.spec.name() + ": L(v) differs from the root formula");
  MatrixBackend b(k);
  if (!is_n_reductive(b, v_matrix).holds) throw VerificationError(form.spec.name() + ": minimal orbit is not n-reductive");
  return {sets, f, v_matrix, nr_matrix, levi, h_plus};
}

TypeCriteria type_criteria(const RealForm& form, const RootClassification& rc, const ThetaSets& sets) {
  const auto& sys = form.roots();
  TypeCriteria out;
  out.systems = strongly_orthogonal_maximal_sets(sys, rc.real & sets.f & sys.positive());
  if (out.systems.empty()) out.systems.push_back(RootMask{});
  auto first_violation = [&](const RootMask& system, const RootMask& betas) -> std::optional<CriterionWitness> {
    for (int a : sys.members(system))
      for (int b : sys.members(betas)) {
        const int s = sys.sum(a, b);
        if (s >= 0 && !betas.test(static_cast<std::size_t>(s))) return CriterionWitness{a, b, s};
      }
    return std::nullopt;
  };
  for (const auto& system : out.systems) {
    out.witness_I.push_back(first_violation(system, sets.f_theta));
    out.witness_II.push_back(first_violation(system, sets.f_theta_r));
    if (!out.witness_I.back()) out.type_I = true;
    if (!out.witness_II.back()) out.type_II = true;
  }
  return out;
}

std::string simple_label(const RootSystem& sys, int root) {
  const auto& c = sys.simple_coefficients(root);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int x = c[i];
    if (x == 0) continue;
    if (x < 0) {
      os << "-";
      x = -x;
    } else if (!first) {
      os << "+";
    }
    if (x != 1) os << x;
    os << "a" << i + 1;
    first = false;
  }
  return os.str();
}

}  // namespace crlie
