#pragma once

// Disk-model drawings. Separatrix s_l sits at angle 2*pi*l/(2d-2) on the
// unit circle and end e_l at 2*pi*(l - 1/2)/(2d-2). Homoclinic chords
// join separatrix points, transversal chords join end points, and the
// separatrix model adds landing edges from each landing class to a
// shared interior equilibrium.

#include <string>
#include <string_view>

#include "vfcomb/core_model.hpp"

namespace vfcomb {

enum class DiskModel { Separatrix, Transversal };

/// Standalone SVG document. Every chord is a <path> whose class list
/// starts with "chord"; there are exactly h+s of them.
std::string render_svg(const PairingConfig& config, DiskModel model);

/// Graphviz document with pinned node positions (use neato -n).
std::string render_dot(const PairingConfig& config, DiskModel model);

std::string_view to_string(DiskModel model);

}  // namespace vfcomb
