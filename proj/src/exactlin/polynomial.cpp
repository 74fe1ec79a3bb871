#include "crlie/exactlin/polynomial.hpp"

#include <algorithm>

namespace crlie {

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000")) throw std::domain_error("rational_roots: coefficient too large to factor");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<mpq_class> rational_roots(const Polynomial<GaussRational>& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  mpz_class lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (!c.is_real()) throw std::domain_error("rational_roots: coefficient is not rational");
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den_mpz_t());
  }
  std::vector<mpz_class> a;
  for (const auto& c : p.coeffs()) a.push_back(mpz_class(c.re() * lcm));
  std::vector<mpq_class> roots;
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (a.size() - low <= 1) return roots;
  const auto num = divisors(a[low]);
  const auto den = divisors(a.back());
  auto eval = [&](const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  for (const auto& d : num)
    for (const auto& e : den)
      for (int s : {1, -1}) {
        mpq_class x(s * d, e);
        x.canonicalize();
        if (eval(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace crlie
