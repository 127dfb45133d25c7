#pragma once

#include "armatri/model.hpp"

#include <random>
#include <vector>

namespace fixtures {

using armatri::ArmaModel;
using armatri::GaussianRational;
using armatri::Rational;

inline Rational R(const char* s) { return Rational::parse(s); }

inline std::vector<Rational> Rs(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(R(x));
  return out;
}

// ARMA(3,2), sigma = 1/10, three distinct real AR roots.
inline ArmaModel ex1() { return ArmaModel::with_sigma(Rs({"133/60", "-49/30", "2/5"}), Rs({"-4", "5"}), R("1/10")); }
// ARMA(2,3), sigma = 1/10, complex AR pair and a triple MA root at -1.
inline ArmaModel ex2() { return ArmaModel::with_sigma(Rs({"1", "-1/2"}), Rs({"3", "3", "1"}), R("1/10")); }
// ARMA(3,2), sigma = 1/10, triple AR root 1/2.
inline ArmaModel ex3() { return ArmaModel::with_sigma(Rs({"3/2", "-3/4", "1/8"}), Rs({"-2", "2"}), R("1/10")); }

inline std::vector<ArmaModel> examples() { return {ex1(), ex2(), ex3()}; }

/// Random stationary models with AR roots of height <= max_height inside the
/// unit disk, MA roots of the same height anywhere except 0, the AR roots and
/// their reciprocals, and orders p, q <= max_order.
class ModelGenerator {
 public:
  explicit ModelGenerator(std::uint64_t seed, int max_height = 8, int max_order = 3)
      : gen_(seed), h_(max_height), order_(max_order) {}

  ArmaModel next() {
    for (;;) {
      const int p = uniform(0, order_);
      const int q = uniform(0, order_);
      std::vector<GaussianRational> ar = roots(p, true, {});
      std::vector<GaussianRational> excluded = ar;
      for (const auto& r : ar) excluded.push_back(r.inverse());
      std::vector<GaussianRational> ma = roots(q, false, excluded);
      if (static_cast<int>(ar.size()) != p || static_cast<int>(ma.size()) != q) continue;
      const Rational sigma2(uniform(1, 9), uniform(1, 9));
      return {coeffs(ar, true), coeffs(ma, false), sigma2};
    }
  }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Rational small_rational() {
    for (;;) {
      const int num = uniform(-h_, h_);
      if (num != 0) return {num, uniform(1, h_)};
    }
  }

  bool admissible(const GaussianRational& z, bool inside, const std::vector<GaussianRational>& excluded) {
    if (z.is_zero()) return false;
    if (inside && z.norm() >= Rational(1)) return false;
    for (const auto& e : excluded)
      if (e == z) return false;
    return true;
  }

  std::vector<GaussianRational> roots(int count, bool inside, const std::vector<GaussianRational>& excluded) {
    std::vector<GaussianRational> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count && ++guard < 1000) {
      const bool pair = count - static_cast<int>(out.size()) >= 2 && uniform(0, 2) == 0;
      if (pair) {
        const GaussianRational z(small_rational(), small_rational());
        if (!admissible(z, inside, excluded)) continue;
        out.push_back(z);
        out.push_back(z.conj());
      } else {
        const GaussianRational z(small_rational());
        // Occasionally repeat an existing real root to exercise multiplicities.
        if (!out.empty() && out.back().is_real() && uniform(0, 4) == 0) {
          out.push_back(out.back());
          continue;
        }
        if (!admissible(z, inside, excluded)) continue;
        out.push_back(z);
      }
    }
    return out;
  }

  static std::vector<Rational> coeffs(const std::vector<GaussianRational>& roots, bool ar) {
    const armatri::Poly p = armatri::poly_from_roots(roots);
    const int deg = p.degree();
    std::vector<Rational> out;
    for (int j = 1; j <= deg; ++j) {
      const Rational c = p.coeff(deg - j).re();
      out.push_back(ar ? -c : c);
    }
    return out;
  }

  std::mt19937_64 gen_;
  int h_;
  int order_;
};

}  // namespace fixtures
