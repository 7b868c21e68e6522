#pragma once

// Bounds-database file format: tab-separated lines
//   r <TAB> k <TAB> exact|lower <TAB> value <TAB> source
// with '#' comments and blank lines allowed.

#include <filesystem>
#include <istream>

#include "vdw/bounds.hpp"

namespace vdw {

BoundsDb load_bounds_db(std::istream& in);
BoundsDb load_bounds_db(const std::filesystem::path& path);

}  // namespace vdw
