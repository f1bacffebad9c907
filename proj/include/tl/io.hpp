#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tl/complex.hpp"
#include "tl/homology.hpp"

namespace tl {

// Matrix file format: line 1 `tlmat <rows> <cols> <ring-tag>`, then one
// `row col value` triple per line, 1-based, sorted.
std::string matrix_to_tlmat(const RingMatrix& m);
RingMatrix tlmat_parse(const std::string& text);
void write_tlmat(const RingMatrix& m, const std::filesystem::path& file);
RingMatrix read_tlmat(const std::filesystem::path& file);

// Writes d_<degree>.tlmat per differential plus a complex.json manifest
// (degrees, dims, labels, ring tag).
void save_complex(const ChainComplex& X, const std::filesystem::path& dir);
ChainComplex load_complex(const std::filesystem::path& dir);

nlohmann::json diagram_to_json(const PlanarDiagram& d);
PlanarDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json element_to_json(const TLElement& x);
nlohmann::json group_to_json(const HomologyGroup& g);

}  // namespace tl
