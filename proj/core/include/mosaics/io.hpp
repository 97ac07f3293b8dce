#pragma once

#include <string>
#include <vector>

#include "mosaics/design.hpp"
#include "mosaics/mosaic.hpp"
#include "mosaics/qdesign.hpp"

namespace mosaics {

// --- mosaic matrix text format ---
// Header line "v b c", then v rows of b cell values (colour numbers 1..c,
// 0 for uncoloured cells of partial mosaics), space-separated.

std::string mosaic_to_text(const Mosaic& m);

struct RawMatrix {
  int v = 0;
  long long b = 0;
  int c = 0;
  std::vector<std::vector<int>> cells;
};

RawMatrix parse_mosaic_text(const std::string& text);

// Builds a mosaic from matrix text, checking v/b/c against the scheme.
Mosaic mosaic_from_text(const std::string& text, const MosaicScheme& scheme);

// Cells mapped through the scheme's colour labels (for display alongside
// sources that label colours by field elements or other names).
std::vector<std::vector<int>> label_matrix(const Mosaic& m);

// --- colour parameter lists ---
// "t,k,lambda;t,k,lambda;..." e.g. "2,3,1;2,1,0;2,3,1".

std::vector<DesignParams> parse_colour_list(const std::string& text);
std::string colour_list_to_string(const MosaicScheme& scheme);

// --- JSON (schema-stable serializations) ---

// {"v":..,"b":..,"c":..,"colours":[{"t":..,"k":..,"lambda":..,"b":..,"r":..}],
//  "labels":[..],"matrix":[[..],..]}
std::string mosaic_to_json_string(const Mosaic& m, int indent = 2);
Mosaic mosaic_from_json_string(const std::string& text);

// {"v":..,"params":[t,k,lambda] | null,"blocks":[[points],..]}
std::string design_to_json_string(const Design& d, int indent = 2);
Design design_from_json_string(const std::string& text);

// --- q-design file format ---
// Header "v q t k lambda b", then b lines of k basis row masks in hex
// (reduced echelon rows, decreasing leading bit).  q must be 2.

std::string qdesign_to_text(const QDesign& d);
QDesign qdesign_from_text(const std::string& text);

// --- small file helpers ---

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace mosaics
