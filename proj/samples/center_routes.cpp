// Compares center-to-periphery straightness of a grid and a 16-radius
// radio-concentric network, first from the closed forms and then from
// shortest paths on generated graphs.

#include <iostream>
#include <numbers>

#include "straightness/straightness.hpp"

int main() {
  using namespace straightness;

  const Sector sector = Sector::from_radii(16);
  std::cout << "alpha    grid      radial(16)\n";
  for (int i = 0; i <= 8; ++i) {
    const double alpha = std::numbers::pi / 4.0 * i / 8;
    std::cout << format_fixed(alpha, 4) << "   " << format_fixed(straightness_rectilinear(alpha), 6)
              << "  " << format_fixed(straightness_radial(sector, alpha), 6) << "\n";
  }

  const NetworkGraph grid = generate_rectilinear({10});
  std::cout << "grid 10x10: max deviation from closed form "
            << format_number(center_curve_check(grid), 3) << "\n";

  const RadialSpec spec{16, 3, 4};
  const RadialCheck check = center_radial_check(generate_radioconcentric(spec), spec);
  std::cout << "radial k=16 m=3: max deviation " << format_number(check.max_deviation, 3)
            << ", ring spread " << format_number(check.max_ring_spread, 3) << "\n";

  const StraightnessSummary s = summarize(grid);
  std::cout << "grid 10x10 all pairs: mean " << format_fixed(s.mean, 4) << " std "
            << format_fixed(s.std_dev, 4) << " over " << s.pair_count << " pairs\n";
}
