#include "gkf/field_sim.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "gkf/rng.hpp"

namespace gkf {

namespace {

std::mutex fftw_plan_mutex;  // FFTW planning is not thread-safe

// Unit-variance stationary Gaussian field on an m x m torus:
// f = (1/m^2) IFFT( sqrt(Lambda) . FFT(xi) ) with xi iid N(0,1) and Lambda
// the DFT of the wrapped covariance, rescaled so sum(Lambda) = m^2.
std::vector<double> synthesize_torus(const SpectralModel& model, int m,
                                     double spacing, std::uint64_t seed) {
  const std::size_t mm = static_cast<std::size_t>(m) * m;
  std::vector<double> cov(mm);
  const double s2 = 2.0 * model.scale * model.scale;
  for (int i = 0; i < m; ++i) {
    int di = std::min(i, m - i);
    for (int j = 0; j < m; ++j) {
      int dj = std::min(j, m - j);
      double h2 = spacing * spacing * (di * di + dj * dj);
      cov[static_cast<std::size_t>(i) * m + j] = std::exp(-h2 / s2);
    }
  }

  fftw_complex* buf = fftw_alloc_complex(mm);
  fftw_plan fwd, bwd;
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    fwd = fftw_plan_dft_2d(m, m, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_2d(m, m, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  // Spectrum of the wrapped covariance (real by symmetry); clip tiny
  // negative roundoff, then normalize for exactly unit variance.
  for (std::size_t i = 0; i < mm; ++i) {
    buf[i][0] = cov[i];
    buf[i][1] = 0.0;
  }
  fftw_execute(fwd);
  std::vector<double> spec(mm);
  double total = 0.0;
  for (std::size_t i = 0; i < mm; ++i) {
    spec[i] = std::max(0.0, buf[i][0]);
    total += spec[i];
  }
  double norm = static_cast<double>(mm) / total;
  for (std::size_t i = 0; i < mm; ++i) spec[i] = std::sqrt(spec[i] * norm);

  const CounterRng rng(seed);
  for (std::size_t i = 0; i < mm; ++i) {
    buf[i][0] = rng.normal(i, 0);
    buf[i][1] = 0.0;
  }
  fftw_execute(fwd);
  for (std::size_t i = 0; i < mm; ++i) {
    buf[i][0] *= spec[i];
    buf[i][1] *= spec[i];
  }
  fftw_execute(bwd);

  std::vector<double> out(mm);
  const double inv = 1.0 / static_cast<double>(mm);
  for (std::size_t i = 0; i < mm; ++i) out[i] = buf[i][0] * inv;

  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  fftw_free(buf);
  return out;
}

}  // namespace

FieldGrid synthesize_field(const SpectralModel& model, int n, double spacing,
                           Topology topology, std::uint64_t seed) {
  if (n < 2 || spacing <= 0.0 || model.scale <= 0.0)
    throw std::invalid_argument("synthesize_field: bad grid or model");
  if (model.scale < 2.0 * spacing)
    throw std::invalid_argument(
        "synthesize_field: under-resolved (scale < 2 * spacing)");

  FieldGrid g;
  g.n = n;
  g.spacing = spacing;
  g.topology = topology;
  if (topology == Topology::torus) {
    g.values = synthesize_torus(model, n, spacing, seed);
  } else {
    int pad = static_cast<int>(std::ceil(6.0 * model.scale / spacing));
    int m = n + pad;
    std::vector<double> big = synthesize_torus(model, m, spacing, seed);
    g.values.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        g.at(i, j) = big[static_cast<std::size_t>(i) * m + j];
  }
  return g;
}

Mu2Estimate mu2_empirical(const std::vector<FieldGrid>& fields) {
  if (fields.empty())
    throw std::invalid_argument("mu2_empirical: at least one field required");
  std::vector<double> per_field;
  per_field.reserve(fields.size());
  for (const FieldGrid& f : fields) {
    const int n = f.n;
    const double invd = 1.0 / f.spacing;
    double sum = 0.0;
    std::uint64_t count = 0;
    const bool wrap = f.topology == Topology::torus;
    const int hi = wrap ? n : n - 1;
    // Forward (adjacent-pixel) differences, not central: the increments that
    // drive the discrete Euler-characteristic counts are the lag-1 ones, and
    // the central difference underestimates mu2 by a further O((d/s)^2).
    for (int i = 0; i < hi; ++i) {
      for (int j = 0; j < hi; ++j) {
        int ip = (i + 1) % n, jp = (j + 1) % n;
        double dx = (f.at(ip, j) - f.at(i, j)) * invd;
        double dy = (f.at(i, jp) - f.at(i, j)) * invd;
        sum += 0.5 * (dx * dx + dy * dy);
        ++count;
      }
    }
    if (count == 0)
      throw std::invalid_argument("mu2_empirical: grid too small");
    per_field.push_back(sum / static_cast<double>(count));
  }
  Mu2Estimate e;
  double mean = 0.0;
  for (double v : per_field) mean += v;
  mean /= static_cast<double>(per_field.size());
  e.mu2 = mean;
  if (per_field.size() > 1) {
    double var = 0.0;
    for (double v : per_field) var += (v - mean) * (v - mean);
    var /= static_cast<double>(per_field.size() - 1);
    e.se = std::sqrt(var / static_cast<double>(per_field.size()));
    e.se_available = true;
  } else {
    e.se = std::numeric_limits<double>::quiet_NaN();
  }
  return e;
}

FieldGrid derived_field(const PointwiseMap& map,
                        const std::vector<FieldGrid>& components) {
  if (components.empty())
    throw std::invalid_argument("derived_field: no component fields");
  const FieldGrid& first = components[0];
  for (const FieldGrid& f : components) {
    if (f.n != first.n || f.topology != first.topology ||
        f.spacing != first.spacing)
      throw std::invalid_argument("derived_field: component shape mismatch");
  }
  const std::size_t sz = first.values.size();
  const std::size_t k = components.size();

  FieldGrid out = first;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearMap>) {
          if (m.coeffs.size() != k)
            throw std::invalid_argument("derived_field: coefficient count");
          for (std::size_t i = 0; i < sz; ++i) {
            double v = 0.0;
            for (std::size_t c = 0; c < k; ++c)
              v += m.coeffs[c] * components[c].values[i];
            out.values[i] = v;
          }
        } else if constexpr (std::is_same_v<T, SumOfSquares>) {
          for (std::size_t i = 0; i < sz; ++i) {
            double v = 0.0;
            for (std::size_t c = 0; c < k; ++c) {
              double y = components[c].values[i];
              v += y * y;
            }
            out.values[i] = v;
          }
        } else if constexpr (std::is_same_v<T, ShiftedSumOfSquares>) {
          if (m.shift.size() != k)
            throw std::invalid_argument("derived_field: shift count");
          for (std::size_t i = 0; i < sz; ++i) {
            double v = 0.0;
            for (std::size_t c = 0; c < k; ++c) {
              double y = components[c].values[i] + m.shift[c];
              v += y * y;
            }
            out.values[i] = v;
          }
        } else if constexpr (std::is_same_v<T, FRatioMap>) {
          if (m.k1 < 1 || m.k2 < 1 ||
              static_cast<std::size_t>(m.k1 + m.k2) != k)
            throw std::invalid_argument("derived_field: k1 + k2 mismatch");
          for (std::size_t i = 0; i < sz; ++i) {
            double num = 0.0, den = 0.0;
            for (int c = 0; c < m.k1; ++c) {
              double y = components[c].values[i];
              num += y * y;
            }
            for (int c = m.k1; c < m.k1 + m.k2; ++c) {
              double y = components[c].values[i];
              den += y * y;
            }
            out.values[i] = (num / m.k1) / (den / m.k2);
          }
        } else {  // ConjunctionMin
          if (k != 2)
            throw std::invalid_argument(
                "derived_field: conjunction needs exactly 2 components");
          const double root = std::sqrt(1.0 - m.rho * m.rho);
          for (std::size_t i = 0; i < sz; ++i) {
            double y1 = components[0].values[i];
            double z2 = m.rho * y1 + root * components[1].values[i];
            out.values[i] = std::min(y1, z2);
          }
        }
      },
      map);
  return out;
}

MaskGrid excursion_mask(const FieldGrid& field, double u) {
  MaskGrid m;
  m.n = field.n;
  m.topology = field.topology;
  m.on.resize(field.values.size());
  for (std::size_t i = 0; i < field.values.size(); ++i)
    m.on[i] = field.values[i] >= u ? 1 : 0;
  return m;
}

void write_field_binary(const FieldGrid& field, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_field_binary: cannot open " + path);
  std::int32_t n = field.n;
  std::int32_t topo = field.topology == Topology::torus ? 0 : 1;
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  out.write(reinterpret_cast<const char*>(&field.spacing),
            sizeof(field.spacing));
  out.write(reinterpret_cast<const char*>(&topo), sizeof(topo));
  out.write(reinterpret_cast<const char*>(field.values.data()),
            static_cast<std::streamsize>(field.values.size() * sizeof(double)));
  if (!out) throw std::runtime_error("write_field_binary: write failed");
}

FieldGrid read_field_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_field_binary: cannot open " + path);
  std::int32_t n = 0, topo = 0;
  double spacing = 0.0;
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  in.read(reinterpret_cast<char*>(&spacing), sizeof(spacing));
  in.read(reinterpret_cast<char*>(&topo), sizeof(topo));
  if (!in || n < 1 || (topo != 0 && topo != 1))
    throw std::runtime_error("read_field_binary: malformed header");
  FieldGrid g;
  g.n = n;
  g.spacing = spacing;
  g.topology = topo == 0 ? Topology::torus : Topology::rectangle;
  g.values.resize(static_cast<std::size_t>(n) * n);
  in.read(reinterpret_cast<char*>(g.values.data()),
          static_cast<std::streamsize>(g.values.size() * sizeof(double)));
  if (!in) throw std::runtime_error("read_field_binary: truncated payload");
  return g;
}

void write_field_csv(const FieldGrid& field, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_field_csv: cannot open " + path);
  out << "# gkf-kit v1\n";
  char buf[32];
  for (int i = 0; i < field.n; ++i) {
    for (int j = 0; j < field.n; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", field.at(i, j));
      out << buf << (j + 1 == field.n ? '\n' : ',');
    }
  }
  if (!out) throw std::runtime_error("write_field_csv: write failed");
}

}  // namespace gkf
