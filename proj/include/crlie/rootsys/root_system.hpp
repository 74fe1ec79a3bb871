#pragma once

#include <bitset>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "crlie/exactlin/subspace.hpp"

namespace crlie {

enum class Family { A, B, C, D };

/// Integer vector in the orthonormal e_i coordinates of the family.
using Root = std::vector<int>;
/// Subset of the roots of one RootSystem, indexed like RootSystem::roots().
using RootMask = std::bitset<128>;

class RootSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

char family_letter(Family f);
Family parse_family(std::string_view s);

/// Classical root system in e_i coordinates. A_n lives in n+1 coordinates;
/// C_n uses the long roots 2e_i.
///
/// Roots are ordered positive first (by height, then lexicographically
/// descending), followed by their negatives in the same order. Every set
/// rendered by the library uses this order.
class RootSystem {
 public:
  static constexpr int kMaxRank = 8;

  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// Number of e_i coordinates (rank + 1 for type A).
  int coord_dim() const { return coord_dim_; }
  std::string name() const;

  std::size_t size() const { return roots_.size(); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int i) const { return roots_[static_cast<std::size_t>(i)]; }
  /// Index of r, or -1.
  int index_of(const Root& r) const;
  int negative(int i) const { return neg_[static_cast<std::size_t>(i)]; }
  /// Index of root(i) + root(j), or -1 when the sum is not a root.
  int sum(int i, int j) const { return sum_[static_cast<std::size_t>(i) * size() + static_cast<std::size_t>(j)]; }
  bool is_positive(int i) const { return static_cast<std::size_t>(i) < size() / 2; }

  /// Indices of the simple roots, Bourbaki order.
  const std::vector<int>& simple() const { return simple_; }
  /// Coefficients of root(i) on the simple roots.
  const std::vector<int>& simple_coefficients(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  int height(int i) const;

  RootMask all() const;
  RootMask positive() const;
  RootMask negate(const RootMask& m) const;
  std::vector<int> members(const RootMask& m) const;
  RootMask mask_of(const std::vector<int>& indices) const;

  /// Image of root j under the reflection in root i.
  int reflect(int i, int j) const { return refl_[static_cast<std::size_t>(i) * size() + static_cast<std::size_t>(j)]; }
  RootMask reflect_mask(int i, const RootMask& m) const;

  /// Inner product of root(i) and root(j) in e coordinates.
  int inner(int i, int j) const;

  /// Cartan coordinate space C^coord_dim; for type A the trace-zero hyperplane.
  const Subspace<GaussRational>& full_cartan() const { return cartan_; }
  /// Coroot direction H_alpha, proportional to alpha in e coordinates.
  Vector coroot(int i) const;
  /// alpha(H) for H in Cartan coordinates.
  GaussRational evaluate(int i, const Vector& h) const;
  /// True when alpha vanishes on every vector of the subspace.
  bool vanishes_on(int i, const Subspace<GaussRational>& a) const;

  /// "e1-e3", "2e1", "-e2-e4".
  std::string format(int i) const;
  static std::string format_root(const Root& r);
  /// Parses an e_i literal or throws RootSystemError.
  int parse(std::string_view literal) const;
  std::vector<std::string> format_set(const RootMask& m) const;
  RootMask parse_set(const std::vector<std::string>& literals) const;

  /// Closed under negation, count formula, positive roots nonnegative on
  /// simple roots.
  bool verify() const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }

 private:
  Family family_;
  int rank_;
  int coord_dim_;
  std::vector<Root> roots_;
  std::map<Root, int> index_;
  std::vector<int> neg_;
  std::vector<int> sum_;
  std::vector<int> refl_;
  std::vector<int> simple_;
  std::vector<std::vector<int>> coeffs_;
  Subspace<GaussRational> cartan_;
};

/// Expected number of roots for the family and rank.
std::size_t classical_root_count(Family f, int rank);

}  // namespace crlie
