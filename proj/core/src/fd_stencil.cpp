#include "fdroof/fd_stencil.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <ostream>
#include <tuple>

#include "fdroof/error.hpp"

namespace fdroof {

namespace {

void check_accuracy(int accuracy_order) {
  if (accuracy_order < kMinAccuracyOrder || accuracy_order > kMaxAccuracyOrder ||
      accuracy_order % 2 != 0) {
    throw ValidationError(fmt::format("accuracy order must be even and in [{}, {}], got {}",
                                      kMinAccuracyOrder, kMaxAccuracyOrder, accuracy_order));
  }
}

// Fornberg's recurrence for weights at points `x` approximating derivatives
// 0..max_m at `z`. Returns c[point][m].
std::vector<std::vector<Rational>> fornberg(const std::vector<Rational>& x, const Rational& z,
                                            int max_m) {
  const std::size_t n = x.size();
  std::vector<std::vector<Rational>> c(n, std::vector<Rational>(max_m + 1, Rational(0)));
  Rational c1 = 1;
  Rational c4 = x[0] - z;
  c[0][0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const int mn = std::min<int>(static_cast<int>(i), max_m);
    Rational c2 = 1;
    const Rational c5 = c4;
    c4 = x[i] - z;
    for (std::size_t j = 0; j < i; ++j) {
      const Rational c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (Rational(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - Rational(k) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  return c;
}

}  // namespace

std::vector<double> FDWeights::as_double() const {
  std::vector<double> out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(w.convert_to<double>());
  return out;
}

FDWeights fd_weights(int derivative_order, int accuracy_order) {
  if (derivative_order != 1 && derivative_order != 2) {
    throw ValidationError(
        fmt::format("derivative order must be 1 or 2, got {}", derivative_order));
  }
  check_accuracy(accuracy_order);

  const int radius = accuracy_order / 2;
  std::vector<Rational> x;
  for (int i = -radius; i <= radius; ++i) x.emplace_back(i);
  const auto c = fornberg(x, Rational(0), derivative_order);

  FDWeights out;
  out.derivative_order = derivative_order;
  out.accuracy_order = accuracy_order;
  out.grid_exponent = -derivative_order;
  out.weights.reserve(x.size());
  for (const auto& row : c) out.weights.push_back(row[derivative_order]);
  return out;
}

Rational a2_sum_exact(int accuracy_order, int dims) {
  if (dims < 1) throw ValidationError("dims must be >= 1");
  const FDWeights w = fd_weights(2, accuracy_order);
  Rational sum = 0;
  for (const auto& v : w.weights) sum += abs(v);
  return sum * dims;
}

double a2_sum(int accuracy_order, int dims) {
  return a2_sum_exact(accuracy_order, dims).convert_to<double>();
}

std::int64_t derivative_flops(DerivativeKind kind, int k) {
  if (k < 2) throw ValidationError(fmt::format("stencil size k must be >= 2, got {}", k));
  const std::int64_t kk = k;
  switch (kind) {
    case DerivativeKind::FirstAxis:
    case DerivativeKind::SecondAxis:
      return (kk + 1) + (kk - 1);
    case DerivativeKind::SecondCross:
      return (kk * kk - 2 * kk) + (kk * kk - 2 * kk - 1);
  }
  return 0;
}

std::string_view to_string(StencilKind kind) noexcept {
  return kind == StencilKind::Star ? "star" : "rotated";
}

bool StencilGeometry::contains(int dx, int dy, int dz) const {
  return std::any_of(points.begin(), points.end(), [&](const StencilPoint& p) {
    return p.dx == dx && p.dy == dy && p.dz == dz;
  });
}

StencilGeometry stencil_geometry(StencilKind kind, int k) {
  if (k < 3 || k % 2 == 0) {
    throw ValidationError(fmt::format("stencil size k must be odd and >= 3, got {}", k));
  }
  const int accuracy = k - 1;
  check_accuracy(accuracy);
  const int r = accuracy / 2;

  // Keyed by (dz, dy, dx) so iteration order is the documented sort order.
  std::map<std::tuple<int, int, int>, Rational> acc;
  const FDWeights second = fd_weights(2, accuracy);
  for (int i = -r; i <= r; ++i) {
    const Rational& w = second.at_offset(i);
    acc[{0, 0, i}] += w;
    acc[{0, i, 0}] += w;
    acc[{i, 0, 0}] += w;
  }
  if (kind == StencilKind::Rotated) {
    const FDWeights first = fd_weights(1, accuracy);
    for (int i = -r; i <= r; ++i) {
      for (int j = -r; j <= r; ++j) {
        if (i == 0 || j == 0) continue;
        const Rational w = first.at_offset(i) * first.at_offset(j);
        acc[{0, j, i}] += w;  // xy plane
        acc[{j, i, 0}] += w;  // yz plane
        acc[{j, 0, i}] += w;  // xz plane
      }
    }
  }

  StencilGeometry g;
  g.kind = kind;
  g.k = k;
  g.points.reserve(acc.size());
  for (const auto& [key, w] : acc) {
    const auto [dz, dy, dx] = key;
    g.points.push_back({dx, dy, dz, w.convert_to<double>()});
  }
  return g;
}

void write_point_list(std::ostream& out, const StencilGeometry& geometry) {
  for (const auto& p : geometry.points) {
    out << fmt::format("{} {} {} {:.17g}\n", p.dx, p.dy, p.dz, p.weight);
  }
}

}  // namespace fdroof
