#include "slhs/basis_opt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "slhs/parallel.hpp"
#include "slhs/random.hpp"

namespace slhs {

namespace {

// Generalized Gell-Mann generators, enumerated to match the documented
// coordinate order. Diagonal generators are sqrt(2/(l(l+1))) (sum_{m<l} E_mm
// - l E_ll), which keeps the set trace-orthogonal.
std::vector<Matrix> gell_mann_set(Index d) {
  std::vector<Matrix> gens;
  gens.reserve(static_cast<std::size_t>(d * d));
  for (Index j = 0; j < d; ++j) {
    for (Index k = j + 1; k < d; ++k) {
      Matrix s = Matrix::Zero(d, d);
      s(j, k) = 1.0;
      s(k, j) = 1.0;
      gens.push_back(s);
      Matrix a = Matrix::Zero(d, d);
      a(j, k) = Complex(0.0, -1.0);
      a(k, j) = Complex(0.0, 1.0);
      gens.push_back(a);
    }
  }
  for (Index l = 1; l < d; ++l) {
    Matrix g = Matrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    for (Index m = 0; m < l; ++m) g(m, m) = scale;
    g(l, l) = -scale * static_cast<double>(l);
    gens.push_back(g);
  }
  gens.push_back(Matrix::Identity(d, d));
  return gens;
}

}  // namespace

Matrix hermitian_from_params(const Eigen::VectorXd& params, Index d) {
  if (params.size() != d * d)
    throw std::invalid_argument("hermitian_from_params: expected d^2 coordinates");
  const auto gens = gell_mann_set(d);
  Matrix h = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < gens.size(); ++i) h += params(static_cast<Index>(i)) * gens[i];
  return h;
}

Matrix unitary_from_params(const Eigen::VectorXd& params, Index d) {
  const Matrix h = hermitian_from_params(params, d);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector phases(d);
  for (Index i = 0; i < d; ++i) phases(i) = std::polar(1.0, es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::VectorXd params_from_unitary(const Matrix& u) {
  const Index d = u.rows();
  // Principal log via Schur: unitary matrices are normal, so T is diagonal.
  Eigen::ComplexSchur<Matrix> schur(u);
  const Matrix& q = schur.matrixU();
  Eigen::VectorXd angles(d);
  for (Index i = 0; i < d; ++i) angles(i) = std::arg(schur.matrixT()(i, i));
  const Matrix h = q * angles.cast<Complex>().asDiagonal() * q.adjoint();
  const auto gens = gell_mann_set(d);
  Eigen::VectorXd params(d * d);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const double denom = std::real((gens[i] * gens[i]).trace());
    params(static_cast<Index>(i)) = std::real((gens[i] * h).trace()) / denom;
  }
  return params;
}

MinimizeResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                           const Eigen::VectorXd& x0, double step, int max_evals, double tol) {
  const Index n = x0.size();
  MinimizeResult res;
  res.evals = 0;

  auto eval = [&](const Eigen::VectorXd& x) {
    ++res.evals;
    return f(x);
  };

  std::vector<Eigen::VectorXd> xs(static_cast<std::size_t>(n + 1), x0);
  std::vector<double> fs(static_cast<std::size_t>(n + 1));
  for (Index i = 0; i < n; ++i) xs[static_cast<std::size_t>(i + 1)](i) += step;
  for (std::size_t i = 0; i < xs.size(); ++i) fs[i] = eval(xs[i]);

  std::vector<std::size_t> order(xs.size());
  const double alpha = 1.0, gamma = 2.0, beta = 0.5, sigma = 0.5;

  while (res.evals < max_evals) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return fs[a] < fs[b];
    });
    const std::size_t best = order.front(), worst = order.back(),
                      second_worst = order[order.size() - 2];

    if (std::abs(fs[worst] - fs[best]) <= tol * (1.0 + std::abs(fs[best]))) {
      res.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t i : order)
      if (i != worst) centroid += xs[i];
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd xr = centroid + alpha * (centroid - xs[worst]);
    const double fr = eval(xr);
    if (fr < fs[best]) {
      const Eigen::VectorXd xe = centroid + gamma * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
    } else if (fr < fs[second_worst]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else {
      const bool outside = fr < fs[worst];
      const Eigen::VectorXd xc =
          outside ? centroid + beta * (xr - centroid) : centroid - beta * (centroid - xs[worst]);
      const double fc = eval(xc);
      if (fc < std::min(fr, fs[worst])) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        for (std::size_t i : order) {
          if (i == best) continue;
          xs[i] = xs[best] + sigma * (xs[i] - xs[best]);
          fs[i] = eval(xs[i]);
          if (res.evals >= max_evals) break;
        }
      }
    }
  }

  const std::size_t best =
      static_cast<std::size_t>(std::min_element(fs.begin(), fs.end()) - fs.begin());
  res.x = xs[best];
  res.value = fs[best];
  return res;
}

namespace {

// Golden-section refinement of a bracketed 1-D minimum.
double golden_refine(const std::function<double(double)>& g, double lo, double hi, int iters,
                     int& evals) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = g(c), fd = g(d);
  evals += 2;
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = g(d);
    }
    ++evals;
  }
  return fc < fd ? c : d;
}

}  // namespace

MinimizeResult coordinate_descent(const std::function<double(const Eigen::VectorXd&)>& f,
                                  const Eigen::VectorXd& x0, double half_range, int max_evals,
                                  double tol) {
  MinimizeResult res;
  res.x = x0;
  res.evals = 1;
  res.value = f(x0);

  constexpr int kScanPoints = 9;
  constexpr int kGoldenIters = 24;

  while (res.evals < max_evals) {
    const double before = res.value;
    for (Index i = 0; i < res.x.size() && res.evals < max_evals; ++i) {
      auto line = [&](double t) {
        Eigen::VectorXd x = res.x;
        x(i) = t;
        return f(x);
      };
      // coarse scan for a bracket around the best sample
      double best_t = res.x(i), best_f = res.value;
      const double center = res.x(i);
      for (int s = 0; s < kScanPoints; ++s) {
        const double t =
            center - half_range + (2.0 * half_range * s) / (kScanPoints - 1);
        const double ft = line(t);
        ++res.evals;
        if (ft < best_f) {
          best_f = ft;
          best_t = t;
        }
      }
      const double width = 2.0 * half_range / (kScanPoints - 1);
      const double t_star =
          golden_refine(line, best_t - width, best_t + width, kGoldenIters, res.evals);
      const double f_star = line(t_star);
      ++res.evals;
      if (f_star < res.value) {
        res.value = f_star;
        res.x(i) = t_star;
      } else if (best_f < res.value) {
        res.value = best_f;
        res.x(i) = best_t;
      }
    }
    if (before - res.value <= tol * (1.0 + std::abs(res.value))) {
      res.converged = true;
      break;
    }
  }
  return res;
}

BasisPoint optimize(const BasisPairObjective& objective, Index d, const OptimizerConfig& cfg) {
  if (cfg.restarts < 1) throw std::invalid_argument("optimize: restarts must be >= 1");
  if (cfg.tol <= 0.0) throw std::invalid_argument("optimize: tol must be positive");
  const Index n = d * d;

  auto penalized = [&](const Eigen::VectorXd& x) {
    const LocalBasis a(unitary_from_params(x.head(n), d));
    const LocalBasis b(unitary_from_params(x.tail(n), d));
    return -objective(a, b);
  };

  auto run_restart = [&](int r) {
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(2 * n);
    if (r > 0) {
      // Haar-random starting bases, one independent stream per restart.
      Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
      x0.head(n) = params_from_unitary(haar_unitary(d, rng));
      x0.tail(n) = params_from_unitary(haar_unitary(d, rng));
    }
    return cfg.method == OptMethod::NelderMead
               ? nelder_mead(penalized, x0, 0.4, cfg.max_evals, cfg.tol)
               : coordinate_descent(penalized, x0, M_PI, cfg.max_evals, cfg.tol);
  };

  const std::vector<MinimizeResult> runs =
      parallel_map<MinimizeResult>(cfg.restarts, run_restart);

  const MinimizeResult* best = &runs.front();
  for (const auto& r : runs)
    if (r.value < best->value) best = &r;

  BasisPoint point;
  point.params_a = best->x.head(n);
  point.params_b = best->x.tail(n);
  point.score = -best->value;
  point.converged = best->converged;
  return point;
}

}  // namespace slhs
