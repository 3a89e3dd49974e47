#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace fdroof {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMinAccuracyOrder = 2;
inline constexpr int kMaxAccuracyOrder = 32;

// Central finite-difference weights on the unit-spaced points -r..r, where
// r = accuracy_order / 2. The physical operator is Σ w_i u(x + i·h) / h^m.
struct FDWeights {
  int derivative_order = 0;
  int accuracy_order = 0;
  std::vector<Rational> weights;  // index i ↔ offset i - radius()
  int grid_exponent = 0;          // -derivative_order

  int radius() const noexcept { return static_cast<int>(weights.size() / 2); }
  const Rational& at_offset(int offset) const { return weights.at(offset + radius()); }
  std::vector<double> as_double() const;
};

// Exact weights for derivative order m ∈ {1, 2} and even accuracy in [2, 32].
// Throws ValidationError otherwise.
FDWeights fd_weights(int derivative_order, int accuracy_order);

// dims × Σ|w| over the 1D second-derivative weights: the Laplacian weight sum
// that enters the CFL bound.
Rational a2_sum_exact(int accuracy_order, int dims);
double a2_sum(int accuracy_order, int dims);

enum class DerivativeKind { FirstAxis, SecondAxis, SecondCross };

// FLOPs for one derivative evaluated with a k-point 1D stencil:
//   first / second along an axis: (k + 1) mult + (k - 1) add = 2k
//   second cross:                 (k² - 2k) mult + (k² - 2k - 1) add
std::int64_t derivative_flops(DerivativeKind kind, int k);

// Stencil size k used for a given even spatial order.
constexpr int stencil_size_for_order(int order) noexcept { return order + 1; }

enum class StencilKind { Star, Rotated };

std::string_view to_string(StencilKind kind) noexcept;

struct StencilPoint {
  int dx = 0;
  int dy = 0;
  int dz = 0;
  double weight = 0.0;

  friend bool operator==(const StencilPoint&, const StencilPoint&) = default;
};

// Star: the 3D Laplacian built from 1D second-derivative weights of accuracy
// k - 1. Rotated: the star plus the xy, yz and xz cross-derivative planes,
// each weighted by the tensor product of 1D first-derivative weights. The
// rotated weights are for display; FLOP counting uses derivative_flops.
struct StencilGeometry {
  StencilKind kind = StencilKind::Star;
  int k = 0;
  std::vector<StencilPoint> points;  // sorted by (dz, dy, dx), unique offsets

  std::size_t size() const noexcept { return points.size(); }
  bool contains(int dx, int dy, int dz) const;
};

// Requires odd k >= 3 with k - 1 a supported accuracy order.
StencilGeometry stencil_geometry(StencilKind kind, int k);

// Writes "dx dy dz weight" lines.
void write_point_list(std::ostream& out, const StencilGeometry& geometry);

}  // namespace fdroof
