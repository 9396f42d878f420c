#include "wavechan/green_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "dense_linalg.hpp"
#include "wavechan/bounds2d.hpp"
#include "wavechan/geometry.hpp"

namespace wavechan {

namespace {
constexpr double kPi = 3.14159265358979323846264338;

int rows_per_point(int dim) { return dim == 3 ? 3 : 1; }

struct OffendingPair {
  bool found = false;
  std::size_t i = 0, j = 0;
};
}  // namespace

GreenMatrix assemble(const DiscretizedDomain& src, const DiscretizedDomain& rcv,
                     double k) {
  if (src.dimension != rcv.dimension)
    throw std::invalid_argument("assemble: dimension mismatch");
  if (!(k > 0)) throw std::invalid_argument("assemble: k <= 0");
  const int rpp = rows_per_point(src.dimension);
  const std::size_t rows = rcv.size() * rpp;
  const std::size_t cols = src.size() * rpp;
  if (rows * cols > std::size_t(140'000'000))
    throw std::invalid_argument(
        "assemble: matrix too large to materialize; use "
        "operator_singular_values or a coarser spacing");
  GreenMatrix gm;
  gm.dimension = src.dimension;
  gm.k = k;
  gm.src_label = src.label;
  gm.rcv_label = rcv.label;
  gm.n_src = src.size();
  gm.n_rcv = rcv.size();
  gm.entries = ComplexMatrix(static_cast<int>(rows), static_cast<int>(cols));
  OffendingPair bad;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(src.size()); ++j) {
    if (bad.found) continue;
    const Point& ps = src.points[j];
    for (std::size_t i = 0; i < rcv.size(); ++i) {
      const Point& pr = rcv.points[i];
      const double dx = pr[0] - ps[0], dy = pr[1] - ps[1], dz = pr[2] - ps[2];
      if (dx * dx + dy * dy + dz * dz <= 0.0) {
#pragma omp critical
        {
          bad.found = true;
          bad.i = i;
          bad.j = static_cast<std::size_t>(j);
        }
        continue;
      }
      const double sw = std::sqrt(rcv.weights[i] * src.weights[j]);
      if (rpp == 1) {
        gm.entries.at(static_cast<int>(i), static_cast<int>(j)) =
            scalar_green_2d(k, pr, ps) * sw;
      } else {
        const Dyadic3 g = dyadic_green_3d(k, pr, ps);
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            gm.entries.at(static_cast<int>(i) * 3 + a,
                          static_cast<int>(j) * 3 + b) = g.m[a][b] * sw;
      }
    }
  }
  if (bad.found)
    throw std::invalid_argument(
        "assemble: overlapping domains, coincident pair (receiver " +
        std::to_string(bad.i) + ", source " + std::to_string(bad.j) + ")");
  return gm;
}

namespace {
std::vector<double> sigmas_checked(ComplexMatrix& gram, double frob_sq) {
  auto s = linalg::sigmas_from_gram(gram);
  double sum = 0;
  for (double v : s) sum += v * v;
  if (frob_sq > 0 && std::abs(sum - frob_sq) > 1e-10 * frob_sq)
    throw std::runtime_error(
        "singular_values: Frobenius consistency residual " +
        std::to_string(std::abs(sum - frob_sq) / frob_sq));
  return s;
}
}  // namespace

std::vector<double> singular_values(const GreenMatrix& gm) {
  const int rows = gm.entries.rows, cols = gm.entries.cols;
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("singular_values: empty matrix");
  const double frob = gm.entries.frobenius_sq();
  if (!(frob > 0)) throw std::invalid_argument("singular_values: zero matrix");
  const int n = std::min(rows, cols);
  if (n > kDefaultSvdCap)
    throw std::invalid_argument(
        "singular_values: Gram side exceeds the dense-SVD cap; use a coarser "
        "spacing");
  ComplexMatrix gram(n, n);
  if (cols <= rows) {
    linalg::herk_accumulate(gram, gm.entries);
  } else {
    // Gram of the conjugate transpose
    ComplexMatrix gt(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) gt.at(j, i) = std::conj(gm.entries.at(i, j));
    linalg::herk_accumulate(gram, gt);
  }
  return sigmas_checked(gram, frob);
}

std::vector<double> singular_values_direct(const GreenMatrix& gm) {
  if (gm.entries.rows == 0 || gm.entries.cols == 0)
    throw std::invalid_argument("singular_values_direct: empty matrix");
  return linalg::svd_values_direct(gm.entries);
}

std::vector<double> operator_singular_values(const DiscretizedDomain& src,
                                             const DiscretizedDomain& rcv,
                                             double k, int svd_cap) {
  if (src.dimension != rcv.dimension)
    throw std::invalid_argument("operator_singular_values: dimension mismatch");
  const int rpp = rows_per_point(src.dimension);
  // Gram over the smaller side; swapping domains transposes the matrix and
  // leaves singular values unchanged.
  const DiscretizedDomain& small = (src.size() <= rcv.size()) ? src : rcv;
  const DiscretizedDomain& big = (src.size() <= rcv.size()) ? rcv : src;
  const int n = static_cast<int>(small.size()) * rpp;
  if (n > svd_cap) {
    const double factor =
        std::pow(double(n) / svd_cap, 1.0 / src.dimension);
    throw std::invalid_argument(
        "operator_singular_values: Gram side " + std::to_string(n) +
        " exceeds cap " + std::to_string(svd_cap) +
        "; increase spacing by about x" + std::to_string(factor));
  }
  ComplexMatrix gram(n, n);
  double frob = 0;
  const std::size_t block_points = std::max<std::size_t>(1, 1u << 11);
  ComplexMatrix block;
  OffendingPair bad;
  for (std::size_t row0 = 0; row0 < big.size(); row0 += block_points) {
    const std::size_t count = std::min(block_points, big.size() - row0);
    const int m = static_cast<int>(count) * rpp;
    block.rows = m;
    block.cols = n;
    block.a.assign(std::size_t(m) * n, complexd(0, 0));
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : frob)
    for (std::int64_t j = 0; j < n / rpp; ++j) {
      if (bad.found) continue;
      const Point& ps = small.points[j];
      const double wj = small.weights[j];
      for (std::size_t bi = 0; bi < count; ++bi) {
        const std::size_t i = row0 + bi;
        const Point& pr = big.points[i];
        const double dx = pr[0] - ps[0], dy = pr[1] - ps[1], dz = pr[2] - ps[2];
        if (dx * dx + dy * dy + dz * dz <= 0.0) {
#pragma omp critical
          {
            bad.found = true;
            bad.i = i;
            bad.j = static_cast<std::size_t>(j);
          }
          continue;
        }
        const double sw = std::sqrt(big.weights[i] * wj);
        if (rpp == 1) {
          const complexd v = scalar_green_2d(k, pr, ps) * sw;
          block.at(static_cast<int>(bi), static_cast<int>(j)) = v;
          frob += std::norm(v);
        } else {
          const Dyadic3 g = dyadic_green_3d(k, pr, ps);
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
              const complexd v = g.m[a][b] * sw;
              block.at(static_cast<int>(bi) * 3 + a,
                       static_cast<int>(j) * 3 + b) = v;
              frob += std::norm(v);
            }
        }
      }
    }
    if (bad.found)
      throw std::invalid_argument(
          "operator_singular_values: coincident pair (" + std::to_string(bad.i) +
          ", " + std::to_string(bad.j) + ")");
    linalg::herk_accumulate(gram, block);
  }
  return sigmas_checked(gram, frob);
}

double operator_frobenius_sq(const DiscretizedDomain& src,
                             const DiscretizedDomain& rcv, double k) {
  if (src.dimension != rcv.dimension)
    throw std::invalid_argument("operator_frobenius_sq: dimension mismatch");
  double total = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(src.size()); ++j) {
    for (std::size_t i = 0; i < rcv.size(); ++i) {
      const double ww = src.weights[j] * rcv.weights[i];
      if (src.dimension == 2)
        total += std::norm(scalar_green_2d(k, rcv.points[i], src.points[j])) * ww;
      else
        total += dyadic_green_3d(k, rcv.points[i], src.points[j]).frobenius_sq() * ww;
    }
  }
  return total;
}

RelativeSpectra relative_spectrum(std::vector<double> sigmas) {
  if (sigmas.empty() || !(sigmas.front() > 0))
    throw std::invalid_argument("relative_spectrum: zero or empty spectrum");
  ChannelSpectrum raw;
  raw.normalization = Normalization::raw;
  int r = 0;
  for (double s : sigmas) {
    ChannelEntry e;
    e.label = {ChannelLabel::Kind::rank, r++, 0, 0, 0};
    e.strength = s * s;
    raw.entries.push_back(e);
  }
  raw.sort_descending();
  RelativeSpectra out;
  out.sum_normalized = raw.normalized(Normalization::sum);
  out.max_normalized = raw.normalized(Normalization::max);
  return out;
}

RelativeSpectra relative_spectrum(const GreenMatrix& gm) {
  return relative_spectrum(singular_values(gm));
}

namespace {
bool is_subset(const DiscretizedDomain& small, const DiscretizedDomain& large) {
  std::vector<std::tuple<double, double, double, double>> entries;
  entries.reserve(large.size());
  for (std::size_t i = 0; i < large.size(); ++i)
    entries.emplace_back(large.points[i][0], large.points[i][1],
                         large.points[i][2], large.weights[i]);
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < small.size(); ++i) {
    const auto key = std::make_tuple(small.points[i][0], small.points[i][1],
                                     small.points[i][2], small.weights[i]);
    if (!std::binary_search(entries.begin(), entries.end(), key)) return false;
  }
  return true;
}
}  // namespace

MonotonicityReport verify_monotonicity(const DiscretizedDomain& small_src,
                                       const DiscretizedDomain& small_rcv,
                                       const DiscretizedDomain& large_src,
                                       const DiscretizedDomain& large_rcv,
                                       double k) {
  if (!is_subset(small_src, large_src) || !is_subset(small_rcv, large_rcv))
    throw std::invalid_argument(
        "verify_monotonicity: smaller domains are not literal point subsets");
  MonotonicityReport rep;
  rep.sigma_small = singular_values_direct(assemble(small_src, small_rcv, k));
  rep.sigma_large = singular_values_direct(assemble(large_src, large_rcv, k));
  rep.tolerance = 1e-10 * rep.sigma_large.front();
  const std::size_t m = std::min(rep.sigma_small.size(), rep.sigma_large.size());
  rep.pass = true;
  rep.differences.resize(m);
  for (std::size_t q = 0; q < m; ++q) {
    rep.differences[q] = rep.sigma_large[q] - rep.sigma_small[q];
    if (rep.differences[q] < -rep.tolerance) rep.pass = false;
  }
  return rep;
}

PiestunReport piestun_counterexample(double k, double spacing, int svd_cap) {
  const double lambda = 2.0 * kPi / k;
  const auto t0 = std::chrono::steady_clock::now();

  RegionParams inner;
  inner.inner_radius = 0.3 * lambda;
  inner.outer_radius = 1.0 * lambda;
  RegionParams outer;
  outer.inner_radius = 10.0 * lambda;
  outer.outer_radius = 11.0 * lambda;
  const auto src = make_geometry(RegionKind::annulus2d, inner, spacing, "shell_src");
  const auto rcv = make_geometry(RegionKind::annulus2d, outer, spacing, "shell_rcv");

  PiestunReport rep;
  rep.spacing = spacing;
  rep.n_src_points = src.size();
  rep.n_rcv_points = rcv.size();

  auto sigma = operator_singular_values(src, rcv, k, svd_cap);

  // analytic reference spectra, by angular order
  const int q_enum = 60;
  std::vector<double> cyl(q_enum + 1), ann(q_enum + 1);
  for (int q = 0; q <= q_enum; ++q) {
    cyl[q] = radial_strength_2d(q, k, 0.0, lambda, 10.0 * lambda, 11.0 * lambda);
    ann[q] = radial_strength_2d(q, k, 0.3 * lambda, lambda, 10.0 * lambda,
                                11.0 * lambda);
  }
  double nb = cyl[0];
  for (int q = 1; q <= q_enum; ++q) nb += 2.0 * cyl[q];
  rep.n_bound_analytic = nb / cyl[0];

  // label sorted numeric ranks with signed q by the analytic ordering
  std::vector<std::pair<double, int>> order;
  for (int q = -q_enum; q <= q_enum; ++q) order.push_back({ann[std::abs(q)], q});
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  const std::size_t nlab = std::min(order.size(), sigma.size());
  rep.q_labels.resize(nlab);
  std::size_t rank0 = 0;
  for (std::size_t r = 0; r < nlab; ++r) {
    rep.q_labels[r] = order[r].second;
    if (order[r].second == 0) rank0 = r;
  }
  rep.sigma0_sq = sigma[rank0] * sigma[rank0];

  double sum_sq = 0;
  for (double s : sigma) sum_sq += s * s;
  rep.n_shell_shell = sum_sq / rep.sigma0_sq;

  // per-rank report tables
  BoundingGeometry2D bounding;
  bounding.k = k;
  bounding.R_s = lambda;
  bounding.R_r = 0.5 * lambda;
  bounding.d = 9.0 * lambda;
  bounding.core = Core::source;
  bounding.S_s = kPi * (1.0 - 0.09) * lambda * lambda;
  bounding.S_r = kPi * 21.0 * lambda * lambda;
  rep.numeric_ratio.resize(nlab);
  rep.analytic_ratio.resize(nlab);
  rep.sum_normalized.resize(nlab);
  rep.bound_sum_normalized.resize(nlab);
  for (std::size_t r = 0; r < nlab; ++r) {
    rep.numeric_ratio[r] = sigma[r] * sigma[r] / rep.sigma0_sq;
    rep.analytic_ratio[r] = cyl[std::abs(rep.q_labels[r])] / cyl[0];
    rep.sum_normalized[r] = sigma[r] * sigma[r] / sum_sq;
    rep.bound_sum_normalized[r] =
        relative_bound_2d(rep.q_labels[r], bounding);
  }
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace wavechan
