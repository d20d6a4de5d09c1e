#pragma once

#include <random>
#include <string>
#include <vector>

#include "bhcr/delsarte.hpp"
#include "bhcr/error.hpp"
#include "bhcr/symmetry.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Mat to_mat(const bhcr::IntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline oracle::Mat to_mat(const bhcr::DelsartePolynomial& p) { return to_mat(p.exponents()); }

inline oracle::Vec to_vec(const bhcr::DiagonalSymmetry& g) {
  oracle::Vec out;
  for (const auto& x : g.phases()) out.emplace_back(x.numerator(), x.denominator());
  return out;
}

inline std::vector<oracle::Vec> to_vecs(const bhcr::SymmetryGroup& g) {
  std::vector<oracle::Vec> out;
  for (const auto& e : g.elements()) out.push_back(to_vec(e));
  return out;
}

inline bhcr::DelsartePolynomial poly(const std::string& s) { return bhcr::parse_delsarte(s); }

inline bhcr::DiagonalSymmetry sym(const std::string& s) { return bhcr::parse_symmetry(s); }

template <class F>
bhcr::ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const bhcr::Error& e) {
    return e.kind();
  }
  throw std::logic_error("no bhcr::Error thrown");
}

// K3 potentials y0^2 + g used as twist fixtures, together with the curves of
// the elliptic table they are paired with.
inline const std::vector<std::string>& k3_surfaces() {
  static const std::vector<std::string> s{
      "y0^2+y1^5*y2+y2^5*y3+y3^6",
      "y0^2+y1^3*y2+y2^9*y3+y3^10",
      "y0^2+y1^4*y2+y2^4*y1+y3^10",
      "y0^2+y1^5*y2+y2^5*y3+y3^5*y1",
  };
  return s;
}

}  // namespace testing
