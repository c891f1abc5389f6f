#pragma once

#include <string>

#include "tde/toric_domain.hpp"
#include "tde/weight_expansion.hpp"

namespace tde {

// Standalone SVG 1.1 documents. Coordinates are rounded for drawing only.

// One filled triangle per weight, drawn where the cut places it, plus the
// triangle Delta(b) for a convex domain. The domain outline is a path.
std::string svg_decomposition(const Expansion& e);

// The domain and an approximation of it, both as filled polygons.
std::string svg_approximation(const ToricDomainSpec& omega, const ToricDomainSpec& approx);

}  // namespace tde
