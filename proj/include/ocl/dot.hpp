#pragma once

#include <iostream>

#include "ocl/automata.hpp"
#include "ocl/geometry.hpp"

namespace ocl {

// Graphviz export. Counter machines label edges "sym [test] / effect".
void export_dot(std::ostream& out, const Oca& machine, const std::string& title = "oca");

// DFA export; when a partition is given, regions are tinted gray (initial
// region), black (border, white text) and white (region of interest).
void export_dot(std::ostream& out, const Dfa& dfa, const RegionPartition* regions = nullptr,
                const std::string& title = "dfa");

}  // namespace ocl
