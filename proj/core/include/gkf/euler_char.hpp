#pragma once

#include <vector>

#include "gkf/field_sim.hpp"

namespace gkf {

struct CubicalComplexCounts {
  long long vertices = 0;
  long long edges = 0;
  long long faces = 0;
  long long chi() const { return vertices - edges + faces; }
};

// Cell counts of the union of closed unit squares of the on-cells.
CubicalComplexCounts cubical_counts(const MaskGrid& mask);

// chi = V - E + F of the closed-cell union (torus identifies opposite edges).
long long euler_char_2d(const MaskGrid& mask);

enum class Topology1d { circle, interval };

// chi of a 1-D excursion mask = number of components (all-on circle -> 0).
long long euler_char_1d(const std::vector<std::uint8_t>& mask, Topology1d topo);

// Independent oracles for cross-checking euler_char_2d.
//
// Closed-square unions connect diagonally touching pixels, so components are
// 8-connected and holes are bounded 4-connected off-regions.
long long euler_char_flood_fill_oracle(const MaskGrid& mask);  // rectangle only

// Local 2x2 configuration count: chi = (Q1 - Q3 - 2 Qd) / 4, where Q1/Q3
// count windows with one/three on-pixels and Qd windows with two diagonal
// on-pixels. Valid on both topologies.
long long euler_char_quad_oracle(const MaskGrid& mask);

}  // namespace gkf
