#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace gkf {

enum class Topology { torus, rectangle };

struct FieldGrid {
  int n = 0;
  double spacing = 1.0;
  Topology topology = Topology::torus;
  std::vector<double> values;  // row-major n*n

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * n + j]; }
  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * n + j]; }
};

// Squared-exponential covariance C(h) = exp(-|h|^2 / (2 s^2)).
struct SpectralModel {
  double scale = 1.0;
  double mu2_analytic() const { return 1.0 / (scale * scale); }
};

// Stationary unit-variance Gaussian field by spectral synthesis on a torus;
// rectangle topology synthesizes on a torus padded by >= 6 s and crops.
FieldGrid synthesize_field(const SpectralModel& model, int n, double spacing,
                           Topology topology, std::uint64_t seed);

struct Mu2Estimate {
  double mu2 = 0.0;
  double se = 0.0;     // NaN when only one field is supplied
  bool se_available = false;
};

// Mean squared forward (adjacent-site) difference over sites, fields and
// both axes — the lag-1 increments that drive discrete excursion counts.
Mu2Estimate mu2_empirical(const std::vector<FieldGrid>& fields);

// Pointwise maps F applied to component fields.
struct LinearMap { std::vector<double> coeffs; };
struct SumOfSquares {};
struct ShiftedSumOfSquares { std::vector<double> shift; };
struct FRatioMap { int k1 = 1, k2 = 1; };
struct ConjunctionMin { double rho = 0.0; };  // min(y1, rho y1 + sqrt(1-rho^2) y2)
using PointwiseMap = std::variant<LinearMap, SumOfSquares, ShiftedSumOfSquares,
                                  FRatioMap, ConjunctionMin>;

FieldGrid derived_field(const PointwiseMap& map,
                        const std::vector<FieldGrid>& components);

struct MaskGrid {
  int n = 0;
  Topology topology = Topology::torus;
  std::vector<std::uint8_t> on;  // row-major n*n

  bool at(int i, int j) const { return on[static_cast<std::size_t>(i) * n + j] != 0; }
};

MaskGrid excursion_mask(const FieldGrid& field, double u);

// Flat binary layout: int32 n, float64 spacing, int32 topology tag (0 torus,
// 1 rectangle), then row-major float64 values, all little-endian.
void write_field_binary(const FieldGrid& field, const std::string& path);
FieldGrid read_field_binary(const std::string& path);
void write_field_csv(const FieldGrid& field, const std::string& path);

}  // namespace gkf
