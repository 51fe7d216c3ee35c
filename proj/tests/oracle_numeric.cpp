#include "oracle_numeric.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <numbers>

namespace charvan::testutil {

std::complex<double> embed(const Cyclotomic& v) {
  std::complex<double> acc = 0;
  const auto& c = v.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                   static_cast<double>(v.modulus());
    acc += c[k].get_d() * std::polar(1.0, angle);
  }
  return acc;
}

NumericTable numeric_character_table(const ClassData& cd) {
  const u64 n = cd.order();
  const std::size_t k = cd.count();
  const auto& els = cd.elements();

  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < els.size(); ++i) index[els[i]] = i;

  // Class-sum matrices of the right regular representation.
  std::vector<Eigen::MatrixXd> sums(k, Eigen::MatrixXd::Zero(n, n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::uint32_t m : cd.class_members()[i]) {
      const Perm& x = els[m];
      for (std::size_t col = 0; col < els.size(); ++col)
        sums[i](static_cast<long>(index.at(els[col] * x)), static_cast<long>(col)) += 1.0;
    }

  // A generic combination separates the isotypic components: weights are
  // square roots of primes, pairwise incommensurable.
  std::vector<double> weights(k);
  {
    u64 p = 2;
    for (std::size_t i = 0; i < k; ++i) {
      while (!is_prime(p)) ++p;
      weights[i] = std::sqrt(static_cast<double>(p));
      ++p;
    }
  }
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < k; ++i) a += weights[i] * sums[i];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a);
  const auto& evals = solver.eigenvalues();
  const auto& evecs = solver.eigenvectors();

  // Cluster eigenvalues; each cluster is one isotypic component of
  // dimension degree^2.
  std::vector<long> cluster(n, -1);
  std::vector<std::complex<double>> centers;
  for (long i = 0; i < static_cast<long>(n); ++i) {
    for (std::size_t c = 0; c < centers.size(); ++c)
      if (std::abs(evals(i) - centers[c]) < 1e-6 * (1.0 + std::abs(centers[c]))) {
        cluster[i] = static_cast<long>(c);
        break;
      }
    if (cluster[i] < 0) {
      cluster[i] = static_cast<long>(centers.size());
      centers.push_back(evals(i));
    }
  }

  NumericTable out;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    long pick = -1;
    std::size_t mult = 0;
    for (long i = 0; i < static_cast<long>(n); ++i)
      if (cluster[i] == static_cast<long>(c)) {
        ++mult;
        if (pick < 0) pick = i;
      }
    Eigen::VectorXcd v = evecs.col(pick);
    long j = 0;
    v.cwiseAbs().maxCoeff(&j);
    u64 degree = static_cast<u64>(std::llround(std::sqrt(static_cast<double>(mult))));
    std::vector<std::complex<double>> row(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::complex<double> omega = (sums[i] * v)(j) / v(j);
      row[i] = static_cast<double>(degree) * omega /
               static_cast<double>(cd.cls(i).size);
    }
    out.degrees.push_back(degree);
    out.values.push_back(std::move(row));
  }
  return out;
}

bool tables_match(const CharacterTable& exact, const NumericTable& numeric,
                  double tol) {
  std::size_t k = exact.columns();
  if (numeric.values.size() != exact.rows()) return false;
  std::vector<bool> used(numeric.values.size(), false);
  for (std::size_t r = 0; r < exact.rows(); ++r) {
    std::vector<std::complex<double>> row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = embed(exact.value(r, i));
    bool matched = false;
    for (std::size_t s = 0; s < numeric.values.size() && !matched; ++s) {
      if (used[s] || numeric.degrees[s] != exact.degree(r)) continue;
      bool close = true;
      for (std::size_t i = 0; i < k && close; ++i)
        close = std::abs(row[i] - numeric.values[s][i]) < tol;
      if (close) {
        used[s] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

} // namespace charvan::testutil
