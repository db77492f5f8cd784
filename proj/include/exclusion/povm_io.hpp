#pragma once

#include <filesystem>

#include "exclusion/sdp.hpp"

namespace exclusion {

// POVM interchange CSV: one header line `dim,count`, then one line per
// effect holding the row-major entries flattened as re,im pairs
// (2*dim*dim values). 12 significant digits, LF line endings.
void write_povm_csv(const Povm& m, const std::filesystem::path& path);
Povm read_povm_csv(const std::filesystem::path& path);

}  // namespace exclusion
