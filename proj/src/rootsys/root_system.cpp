#include "crlie/rootsys/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace crlie {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(std::string_view s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      default: break;
    }
  }
  throw RootSystemError("unsupported root system family '" + std::string(s) + "'");
}

std::size_t classical_root_count(Family f, int n) {
  const auto r = static_cast<std::size_t>(n);
  switch (f) {
    case Family::A: return r * (r + 1);
    case Family::B:
    case Family::C: return 2 * r * r;
    case Family::D: return 2 * r * (r - 1);
  }
  return 0;
}

namespace {

Root unit(int dim, int i, int c = 1) {
  Root r(static_cast<std::size_t>(dim), 0);
  r[static_cast<std::size_t>(i)] = c;
  return r;
}

Root add(Root a, const Root& b, int scale = 1) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += scale * b[k];
  return a;
}

int dot(const Root& a, const Root& b) {
  int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  if (rank < 1) throw RootSystemError("root system rank must be at least 1");
  if (family == Family::D && rank < 3) throw RootSystemError("type D requires rank at least 3");
  if (rank > kMaxRank) throw RootSystemError("rank " + std::to_string(rank) + " exceeds the supported maximum " + std::to_string(kMaxRank));
  coord_dim_ = family == Family::A ? rank + 1 : rank;
  const int m = coord_dim_;

  std::vector<Root> pos;
  std::vector<Root> simple;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      pos.push_back(add(unit(m, i), unit(m, j), -1));
      if (family != Family::A) pos.push_back(add(unit(m, i), unit(m, j)));
    }
  if (family == Family::B)
    for (int i = 0; i < m; ++i) pos.push_back(unit(m, i));
  if (family == Family::C)
    for (int i = 0; i < m; ++i) pos.push_back(unit(m, i, 2));

  for (int i = 0; i + 1 < m; ++i) simple.push_back(add(unit(m, i), unit(m, i + 1), -1));
  if (family == Family::B) simple.push_back(unit(m, m - 1));
  if (family == Family::C) simple.push_back(unit(m, m - 1, 2));
  if (family == Family::D) simple.push_back(add(unit(m, m - 2), unit(m, m - 1)));

  // simple-root coefficients via an augmented echelon form
  EchelonBuilder<GaussRational> aug(m + rank);
  for (int k = 0; k < rank; ++k) {
    Vector row = zero_vector<GaussRational>(m + rank);
    for (int c = 0; c < m; ++c) row(c) = GaussRational(simple[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]);
    row(m + k) = GaussRational(1);
    aug.insert(row);
  }
  auto coefficients = [&](const Root& r) {
    Vector v = zero_vector<GaussRational>(m + rank);
    for (int c = 0; c < m; ++c) v(c) = GaussRational(r[static_cast<std::size_t>(c)]);
    aug.reduce(v);
    std::vector<int> out(static_cast<std::size_t>(rank));
    for (int k = 0; k < rank; ++k) {
      for (int c = 0; c < m; ++c)
        if (!v(c).is_zero()) throw std::logic_error("root outside the span of the simple roots");
      const GaussRational x = -v(m + k);
      if (!x.is_real() || x.re().get_den() != 1) throw std::logic_error("non-integral simple-root coefficient");
      out[static_cast<std::size_t>(k)] = static_cast<int>(x.re().get_num().get_si());
    }
    return out;
  };

  auto height_of = [&](const Root& r) {
    int h = 0;
    for (int c : coefficients(r)) h += c;
    return h;
  };
  std::stable_sort(pos.begin(), pos.end(), [&](const Root& a, const Root& b) {
    const int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  roots_ = pos;
  for (const Root& r : pos) {
    Root n = r;
    for (int& x : n) x = -x;
    roots_.push_back(n);
  }
  const std::size_t total = roots_.size();
  for (std::size_t i = 0; i < total; ++i) index_[roots_[i]] = static_cast<int>(i);
  neg_.resize(total);
  for (std::size_t i = 0; i < total; ++i) neg_[i] = static_cast<int>((i + total / 2) % total);
  coeffs_.reserve(total);
  for (const Root& r : roots_) coeffs_.push_back(coefficients(r));
  for (const Root& s : simple) simple_.push_back(index_.at(s));

  sum_.assign(total * total, -1);
  refl_.assign(total * total, -1);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) {
      auto it = index_.find(add(roots_[i], roots_[j]));
      if (it != index_.end()) sum_[i * total + j] = it->second;
      const int num = 2 * dot(roots_[j], roots_[i]);
      const int den = dot(roots_[i], roots_[i]);
      refl_[i * total + j] = index_.at(add(roots_[j], roots_[i], -num / den));
    }

  std::vector<Vector> cartan;
  if (family == Family::A) {
    for (int i = 0; i + 1 < m; ++i) {
      Vector h = zero_vector<GaussRational>(m);
      h(i) = GaussRational(1);
      h(i + 1) = GaussRational(-1);
      cartan.push_back(h);
    }
  } else {
    for (int i = 0; i < m; ++i) {
      Vector h = zero_vector<GaussRational>(m);
      h(i) = GaussRational(1);
      cartan.push_back(h);
    }
  }
  cartan_ = Subspace<GaussRational>::span(m, cartan);
}

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int i) const {
  int h = 0;
  for (int c : simple_coefficients(i)) h += c;
  return h;
}

RootMask RootSystem::all() const {
  RootMask m;
  for (std::size_t i = 0; i < size(); ++i) m.set(i);
  return m;
}

RootMask RootSystem::positive() const {
  RootMask m;
  for (std::size_t i = 0; i < size() / 2; ++i) m.set(i);
  return m;
}

RootMask RootSystem::negate(const RootMask& m) const {
  RootMask out;
  for (std::size_t i = 0; i < size(); ++i)
    if (m.test(i)) out.set(static_cast<std::size_t>(neg_[i]));
  return out;
}

std::vector<int> RootSystem::members(const RootMask& m) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (m.test(i)) out.push_back(static_cast<int>(i));
  return out;
}

RootMask RootSystem::mask_of(const std::vector<int>& indices) const {
  RootMask m;
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= size()) throw RootSystemError("root index out of range");
    m.set(static_cast<std::size_t>(i));
  }
  return m;
}

RootMask RootSystem::reflect_mask(int i, const RootMask& m) const {
  RootMask out;
  for (std::size_t j = 0; j < size(); ++j)
    if (m.test(j)) out.set(static_cast<std::size_t>(reflect(i, static_cast<int>(j))));
  return out;
}

int RootSystem::inner(int i, int j) const { return dot(root(i), root(j)); }

Vector RootSystem::coroot(int i) const {
  Vector h(coord_dim_);
  for (int k = 0; k < coord_dim_; ++k) h(k) = GaussRational(root(i)[static_cast<std::size_t>(k)]);
  return h;
}

GaussRational RootSystem::evaluate(int i, const Vector& h) const {
  if (h.size() != coord_dim_) throw DimensionError("toral vector has the wrong number of coordinates");
  GaussRational s(0);
  const Root& r = root(i);
  for (int k = 0; k < coord_dim_; ++k)
    if (r[static_cast<std::size_t>(k)] != 0 && !h(k).is_zero()) s += GaussRational(r[static_cast<std::size_t>(k)]) * h(k);
  return s;
}

bool RootSystem::vanishes_on(int i, const Subspace<GaussRational>& a) const {
  for (const auto& h : a.vectors())
    if (!evaluate(i, h).is_zero()) return false;
  return true;
}

std::string RootSystem::format_root(const Root& r) {
  std::string out;
  for (std::size_t k = 0; k < r.size(); ++k) {
    const int c = r[k];
    if (c == 0) continue;
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += 'e' + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

std::string RootSystem::format(int i) const { return format_root(root(i)); }

int RootSystem::parse(std::string_view literal) const {
  std::string s;
  for (char ch : literal)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&]() -> int {
    throw RootSystemError("malformed root literal '" + std::string(literal) + "' for " + name());
  };
  if (s.empty()) return fail();
  Root r(static_cast<std::size_t>(coord_dim_), 0);
  std::size_t p = 0;
  while (p < s.size()) {
    int sign = 1;
    if (s[p] == '+' || s[p] == '-') {
      sign = s[p] == '-' ? -1 : 1;
      ++p;
    } else if (p != 0) {
      return fail();
    }
    int coef = 0;
    bool has_coef = false;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      coef = coef * 10 + (s[p] - '0');
      has_coef = true;
      ++p;
    }
    if (!has_coef) coef = 1;
    if (p >= s.size() || s[p] != 'e') return fail();
    ++p;
    int idx = 0;
    bool has_idx = false;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      idx = idx * 10 + (s[p] - '0');
      has_idx = true;
      ++p;
    }
    if (!has_idx || idx < 1 || idx > coord_dim_) return fail();
    r[static_cast<std::size_t>(idx - 1)] += sign * coef;
  }
  const int i = index_of(r);
  if (i < 0) throw RootSystemError("'" + std::string(literal) + "' is not a root of " + name());
  return i;
}

std::vector<std::string> RootSystem::format_set(const RootMask& m) const {
  std::vector<std::string> out;
  for (int i : members(m)) out.push_back(format(i));
  return out;
}

RootMask RootSystem::parse_set(const std::vector<std::string>& literals) const {
  RootMask m;
  for (const auto& l : literals) m.set(static_cast<std::size_t>(parse(l)));
  return m;
}

bool RootSystem::verify() const {
  if (size() != classical_root_count(family_, rank_)) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (index_of(add(Root(static_cast<std::size_t>(coord_dim_), 0), root(static_cast<int>(i)), -1)) != neg_[i]) return false;
    const auto& c = coeffs_[i];
    const bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    const bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (is_positive(static_cast<int>(i)) ? !nonneg : !nonpos) return false;
  }
  return true;
}

}  // namespace crlie
