#pragma once

#include <cstdint>

#include "wsnloc/deployment.hpp"

namespace wsnloc {

// Fraction of the lattice spacing used as the square grid's default
// placement-noise std.
inline constexpr double kDefaultNoiseFraction = 0.1;

// n points i.i.d. uniform on [0, r]^2.
Deployment gen_random(int n, double r, std::uint64_t seed);

// side_count^2 nodes at lattice pitch r/side_count, inset half a pitch from
// the arena border, each perturbed by per-axis Gaussian noise.
Deployment gen_square_grid(int side_count, double r, GridNoise noise, std::uint64_t seed);

// rows x cols nodes on a hexagonal lattice (odd rows offset by half the
// column spacing, row spacing = column spacing * sqrt(3)/2), uniformly
// scaled and centered to fit inside [0, r]^2, then perturbed like the
// square grid.
Deployment gen_hex_grid(int rows, int cols, double r, GridNoise noise, std::uint64_t seed);

// m distinct anchor indices drawn uniformly without replacement.
Deployment select_anchors(Deployment deployment, int m, std::uint64_t seed);

// Lattice pitch of the noise-free grids (used for noise defaults).
double square_grid_spacing(int side_count, double r);
double hex_grid_spacing(int rows, int cols, double r);

}  // namespace wsnloc
