#ifndef GGR_TESTS_SUPPORT_HPP
#define GGR_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "ggr/difference.hpp"
#include "ggr/laurent.hpp"
#include "ggr/rational.hpp"

namespace ggr::testing {

inline constexpr int kPropertyRuns = 1000;

inline Rational random_rational(std::mt19937_64 &rng, int max_num = 9, int max_den = 5) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline LaurentPoly random_poly(std::mt19937_64 &rng, int max_terms = 5, int max_exp = 6) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  LaurentPoly::Terms terms;
  for (int i = count(rng); i > 0; --i)
    terms[exp(rng)] = random_rational(rng);
  return LaurentPoly(std::move(terms));
}

inline DifferenceScheme random_scheme(std::mt19937_64 &rng, int max_terms = 6, int max_node = 8) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> node(-max_node, max_node);
  std::uniform_int_distribution<int> order(1, 6);
  std::map<Node, Rational> picked;
  for (int i = count(rng); i > 0; --i)
    picked[node(rng)] = random_rational(rng);
  std::vector<SchemeTerm> terms;
  for (auto &[b, c] : picked)
    terms.push_back({b, c});
  return DifferenceScheme(std::move(terms), order(rng));
}

/// r_n node coefficients by running R_n(h) = R_{n-1}(2h) - 2^{n-1} R_{n-1}(h)
/// on a node -> coefficient table, without any polynomial code.
inline std::map<std::int64_t, Integer> mz_nodes_oracle(int n) {
  std::map<std::int64_t, Integer> r{{1, 1}, {0, -1}};
  for (int m = 2; m <= n; ++m) {
    std::map<std::int64_t, Integer> next;
    for (auto &[b, c] : r)
      next[2 * b] += c;
    Integer factor = Integer(1) << (m - 1);
    for (auto &[b, c] : r)
      next[b] -= factor * c;
    std::erase_if(next, [](const auto &kv) { return kv.second == 0; });
    r = std::move(next);
  }
  return r;
}

/// theta_m of sum_{j} (-1)^{n-j} C(n,j) t^{j-k}, summed term by term.
inline Integer ggr_moment_oracle(int n, int k, int m) {
  Integer total = 0;
  for (int j = 0; j <= n; ++j) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, j);
    if ((n - j) % 2)
      c = -c;
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), Integer(j - k).get_mpz_t(), m);
    total += c * p;
  }
  return total;
}

} // namespace ggr::testing

#endif // GGR_TESTS_SUPPORT_HPP
