#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library code paths being checked.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace alsim::oracle {

/// ln(n!) by direct long-double product.
inline double log_factorial(unsigned n) {
  long double product = 1.0L;
  for (unsigned i = 2; i <= n; ++i) product *= i;
  return static_cast<double>(std::log(product));
}

inline long double binomial(unsigned n, unsigned k) {
  long double c = 1.0L;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

/// I_x(a, b) for integer a, b via the binomial tail identity
/// I_x(a, b) = sum_{j=a}^{a+b-1} C(a+b-1, j) x^j (1-x)^(a+b-1-j).
inline double incomplete_beta_integer(double x, unsigned a, unsigned b) {
  const unsigned n = a + b - 1;
  long double sum = 0.0L;
  for (unsigned j = a; j <= n; ++j) {
    sum += binomial(n, j) * std::pow(static_cast<long double>(x), j) *
           std::pow(1.0L - x, n - j);
  }
  return static_cast<double>(sum);
}

/// Beta density for integer shapes from factorials:
/// p^(a-1) (1-p)^(b-1) (a+b-1)! / ((a-1)! (b-1)!).
inline double beta_pdf_integer(double p, unsigned a, unsigned b) {
  const long double log_norm = std::lgamma(static_cast<long double>(a + b)) -
                               std::lgamma(static_cast<long double>(a)) -
                               std::lgamma(static_cast<long double>(b));
  return static_cast<double>(std::exp(log_norm + (a - 1) * std::log(static_cast<long double>(p)) +
                                      (b - 1) * std::log1p(-static_cast<long double>(p))));
}

/// Composite trapezoid rule on [lo, hi] with `points` nodes.
inline double trapezoid(const std::function<double(double)>& f, double lo, double hi,
                        std::size_t points) {
  const double h = (hi - lo) / static_cast<double>(points - 1);
  double sum = 0.5 * (f(lo) + f(hi));
  for (std::size_t i = 1; i + 1 < points; ++i) sum += f(lo + h * static_cast<double>(i));
  return sum * h;
}

/// Full stable sort of every instance by (distance key, index); first n.
/// `key` is applied to each probability; callers pass the documented tie key.
template <typename Key>
std::vector<std::size_t> brute_force_least_confident(const std::vector<double>& p_hats,
                                                     std::size_t n, Key key) {
  std::vector<std::size_t> order(p_hats.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return key(p_hats[l]) < key(p_hats[r]);
  });
  order.resize(n);
  return order;
}

/// True if `xml` parses as well-formed XML.
inline bool well_formed_xml(const std::string& xml, std::string* error = nullptr) {
  try {
    std::istringstream in(xml);
    boost::property_tree::ptree tree;
    boost::property_tree::read_xml(in, tree);
    return true;
  } catch (const std::exception& e) {
    if (error) *error = e.what();
    return false;
  }
}

inline std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

} // namespace alsim::oracle
