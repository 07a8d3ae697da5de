#include "puregaps/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace puregaps::oracle {

GapProjections gap_projections(const GeneratingSet& gamma) {
  GapProjections out;
  for (const auto& p : gamma.points()) {
    out.gaps1.push_back(p.a);
    out.gaps2.push_back(p.b);
  }
  std::sort(out.gaps1.begin(), out.gaps1.end());
  std::sort(out.gaps2.begin(), out.gaps2.end());
  return out;
}

SemigroupBox::SemigroupBox(std::int64_t bound, std::vector<bool> grid)
    : bound_(bound), grid_(std::move(grid)), count_(static_cast<std::size_t>(std::count(grid_.begin(), grid_.end(), true))) {}

bool SemigroupBox::contains(const LatticePoint& p) const {
  if (p.a > bound_ || p.b > bound_) return false;
  return grid_[static_cast<std::size_t>(p.a * (bound_ + 1) + p.b)];
}

PointSet SemigroupBox::members() const {
  PointSet out;
  out.reserve(count_);
  for (std::int64_t a = 0; a <= bound_; ++a) {
    for (std::int64_t b = 0; b <= bound_; ++b) {
      if (grid_[static_cast<std::size_t>(a * (bound_ + 1) + b)]) out.emplace_back(a, b);
    }
  }
  return out;
}

SemigroupBox semigroup_box(const GeneratingSet& gamma, std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("semigroup_box: bound must be nonnegative");
  const auto proj = gap_projections(gamma);

  std::vector<LatticePoint> generators;
  for (std::int64_t s = 0; s <= bound; ++s) {
    if (!std::binary_search(proj.gaps1.begin(), proj.gaps1.end(), s)) generators.emplace_back(s, 0);
    if (!std::binary_search(proj.gaps2.begin(), proj.gaps2.end(), s)) generators.emplace_back(0, s);
  }
  for (const auto& p : gamma.points()) {
    if (p.a <= bound && p.b <= bound) generators.push_back(p);
  }
  normalize(generators);

  const auto side = static_cast<std::size_t>(bound + 1);
  std::vector<bool> grid(side * side, false);
  for (std::size_t x = 0; x < generators.size(); ++x) {
    for (std::size_t y = x; y < generators.size(); ++y) {
      const LatticePoint m = lub(generators[x], generators[y]);
      grid[static_cast<std::size_t>(m.a) * side + static_cast<std::size_t>(m.b)] = true;
    }
  }
  return SemigroupBox(bound, std::move(grid));
}

PointSet pure_gaps_direct(const GeneratingSet& gamma) {
  const auto pts = gamma.points();
  if (pts.empty()) return {};
  std::int64_t max_a = 0, max_b = 0;
  for (const auto& p : pts) {
    max_a = std::max(max_a, p.a);
    max_b = std::max(max_b, p.b);
  }
  // Dense bitmap over [0,max_a] x [0,max_b]: the number of incomparable pairs
  // is ~g^2/2, far more than the number of distinct glbs.
  const auto width = static_cast<std::size_t>(max_b + 1);
  std::vector<bool> seen(static_cast<std::size_t>(max_a + 1) * width, false);
  for (std::size_t x = 0; x < pts.size(); ++x) {
    for (std::size_t y = x + 1; y < pts.size(); ++y) {
      if (incomparable(pts[x], pts[y])) {
        const LatticePoint m = glb(pts[x], pts[y]);
        seen[static_cast<std::size_t>(m.a) * width + static_cast<std::size_t>(m.b)] = true;
      }
    }
  }
  PointSet out;
  for (std::int64_t a = 0; a <= max_a; ++a) {
    for (std::int64_t b = 0; b <= max_b; ++b) {
      if (seen[static_cast<std::size_t>(a) * width + static_cast<std::size_t>(b)]) out.emplace_back(a, b);
    }
  }
  return out;
}

PeriodReport check_period_property(std::span<const LatticePoint> points, std::int64_t period) {
  PeriodReport report;
  if (period < 1) {
    report.violations.push_back({{}, 0, "period must be positive"});
    return report;
  }
  std::map<std::int64_t, std::int64_t> tau;
  for (const auto& p : points) {
    if (!tau.emplace(p.a, p.b).second) report.violations.push_back({p, 0, "beta appears twice"});
  }
  if (tau.empty()) return report;
  const std::int64_t max_beta = tau.rbegin()->first;

  for (const auto& [beta, t] : tau) {
    for (std::int64_t k = 1; beta + k * period <= max_beta || k * period < t; ++k) {
      ++report.checks;
      const auto it = tau.find(beta + k * period);
      const bool is_gap = it != tau.end();
      const bool below = k * period < t;
      if (is_gap != below) {
        report.violations.push_back(
            {{beta, t}, k, is_gap ? "beta+k*pi is a gap but k*pi >= tau(beta)" : "k*pi < tau(beta) but beta+k*pi is not a gap"});
      } else if (is_gap && it->second != t - k * period) {
        report.violations.push_back({{beta, t}, k, "tau(beta+k*pi) != tau(beta)-k*pi"});
      }
    }
  }
  return report;
}

PeriodReport check_period_property(const GeneratingSet& gamma) {
  return check_period_property(gamma.points(), gamma.period());
}

}  // namespace puregaps::oracle
