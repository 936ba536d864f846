#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "domrt/algorithms.hpp"
#include "domrt/dist_core.hpp"

namespace domrt {

using CdfInput = std::variant<SampleSet, DiscreteDist>;

/// Reads either CSV flavour, detected by its header row ("runtime" for
/// SampleSet, "k,pmf,cdf" for DiscreteDist).
CdfInput read_cdf_input(std::istream& is);
CdfInput read_cdf_input_file(const std::string& path);

}  // namespace domrt
