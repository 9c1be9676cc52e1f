#ifndef STPADE_IO_HPP
#define STPADE_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "stpade/dataset.hpp"
#include "stpade/inverse.hpp"
#include "stpade/measure.hpp"
#include "stpade/spectral.hpp"

namespace stpade {

/// Render with 17 significant digits (lossless double round trip).
std::string format_double(double value);

/// {"atoms":[{"z":..,"lambda":..},...],
///  "density": null | {"kind":"checkerboard"} | {"kind":"table","z":[..],"w":[..]}}
nlohmann::json measure_to_json(const SpectralMeasure& measure);
SpectralMeasure measure_from_json(const nlohmann::json& j);
SpectralMeasure load_measure(const std::string& path);

/// {"variable":"xi"|"s","pairs":[{"pole":..,"residue":..},...]}
nlohmann::json pole_residue_to_json(const PoleResidueForm& form);
PoleResidueForm pole_residue_from_json(const nlohmann::json& j);

nlohmann::json reconstruction_to_json(const ReconstructionResult& result);

/// CSV schemas: "omega,re_eps1,im_eps1,re_eps2,im_eps2,re_d,im_d" when every
/// record carries permittivities (s is re-derived on read), otherwise
/// "omega,re_s,im_s,re_d,im_d".
void write_dataset_csv(std::ostream& out, const FrequencyDataset& dataset);
FrequencyDataset read_dataset_csv(std::istream& in);
void save_dataset_csv(const std::string& path, const FrequencyDataset& dataset);
FrequencyDataset load_dataset_csv(const std::string& path);

void save_text(const std::string& path, const std::string& content);

} // namespace stpade

#endif
