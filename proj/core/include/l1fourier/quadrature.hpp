#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace l1f::quad {

using Complex = std::complex<double>;

/// Node budget: grids above this frequency are not desk scale.
inline constexpr double kMaxDeskFrequency = 262144.0;
inline constexpr int kDefaultNodesPerPanel = 16;

/// Gauss–Legendre rule on [−1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss–Legendre rule via Newton iteration on P_n.
GaussRule gauss_legendre(int n);

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double width() const { return b - a; }
};

/// Graded panel decomposition of [−π, π].
///
/// Panels are dyadic toward the origin, [2^{−j−1}π, 2^{−j}π] and mirror
/// images, each split so width × max_resolved_frequency <= gπ/4. Immutable
/// after construction.
class QuadratureGrid {
 public:
  QuadratureGrid(std::vector<Panel> panels, int nodes_per_panel, double max_resolved_frequency,
                 double tolerance);

  const std::vector<Panel>& panels() const noexcept { return panels_; }
  int nodes_per_panel() const noexcept { return static_cast<int>(rule_.nodes.size()); }
  double max_resolved_frequency() const noexcept { return max_frequency_; }
  double tolerance() const noexcept { return tolerance_; }
  const GaussRule& rule() const noexcept { return rule_; }
  std::size_t node_count() const noexcept { return panels_.size() * rule_.nodes.size(); }

  /// Every panel halved: twice the nodes, same order.
  QuadratureGrid refined() const;

 private:
  std::vector<Panel> panels_;
  GaussRule rule_;
  double max_frequency_;
  double tolerance_;
};

/// Throws InputError for max_freq < 1 or tolerance below 1e−14 and
/// ResolutionError above kMaxDeskFrequency.
QuadratureGrid build_grid(double max_freq, double tolerance,
                          int nodes_per_panel = kDefaultNodesPerPanel);

/// Integrand over (−π, π] with the highest frequency present and any
/// interior points where it may jump.
struct Integrand {
  std::function<Complex(double)> fn;
  double max_frequency = 0.0;
  std::vector<double> breakpoints;
};

/// ∫_{−π}^{π} |fn(x)| dx.
///
/// Real-valued stretches are split at sign changes of the integrand (located
/// by bracketing root search) so each Gauss rule sees a smooth function.
/// Panels are independent; results are combined in panel order, so the value
/// does not depend on `threads`. Throws ResolutionError when the integrand's
/// frequency exceeds the grid's.
double l1_norm(const Integrand& integrand, const QuadratureGrid& grid, unsigned threads = 1);

/// |I(grid) − I(grid.refined())| / max(I(grid), tiny).
double self_convergence(const Integrand& integrand, const QuadratureGrid& grid,
                        unsigned threads = 1);

}  // namespace l1f::quad
