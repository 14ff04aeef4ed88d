#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fluxbcs/bcs.hpp"

namespace fluxbcs::bcs {

/// Named materials loaded from a `materials.json` document:
///
///     { "materials": [ { "name": "Al", "kappa_el_cm3": 1.806e23,
///                        "tc_K": 1.2, "theta_d_K": 428 }, ... ] }
///
/// kappa_el_cm3 is optional.
class MaterialRegistry {
public:
    /// Al and Nb; matches data/materials.json.
    static MaterialRegistry builtin();
    /// Throws ParseError on malformed JSON or missing fields, DomainError on
    /// physically invalid entries.
    static MaterialRegistry from_json(std::string_view text);
    static MaterialRegistry from_file(const std::filesystem::path& path);

    /// Case-sensitive lookup; throws DomainError listing the known names.
    const Material& get(std::string_view name) const;
    const std::vector<Material>& materials() const { return materials_; }

private:
    std::vector<Material> materials_;
};

}  // namespace fluxbcs::bcs
