#include "fluxbcs/materials.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fluxbcs/error.hpp"

namespace fluxbcs::bcs {

MaterialRegistry MaterialRegistry::builtin() {
    MaterialRegistry reg;
    reg.materials_.push_back({"Al", 18.06e22, phys::kelvin(1.2), phys::kelvin(428.0)});
    reg.materials_.push_back({"Nb", std::nullopt, phys::kelvin(9.8), phys::kelvin(275.0)});
    return reg;
}

MaterialRegistry MaterialRegistry::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("materials registry: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("materials") || !doc["materials"].is_array()) {
        throw ParseError("materials registry: expected an object with a \"materials\" array");
    }

    MaterialRegistry reg;
    std::size_t i = 0;
    for (const auto& entry : doc["materials"]) {
        const std::string where = "materials registry entry " + std::to_string(i++);
        try {
            Material m;
            m.name = entry.at("name").get<std::string>();
            if (entry.contains("kappa_el_cm3") && !entry["kappa_el_cm3"].is_null()) {
                m.kappa_el_cm3 = entry["kappa_el_cm3"].get<double>();
            }
            m.T_c = phys::kelvin(entry.at("tc_K").get<double>());
            m.Theta_D = phys::kelvin(entry.at("theta_d_K").get<double>());
            m.validate();
            reg.materials_.push_back(std::move(m));
        } catch (const nlohmann::json::exception& ex) {
            throw ParseError(where + ": " + ex.what());
        }
    }
    return reg;
}

MaterialRegistry MaterialRegistry::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open materials registry " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

const Material& MaterialRegistry::get(std::string_view name) const {
    std::string known;
    for (const auto& m : materials_) {
        if (m.name == name) {
            return m;
        }
        known += known.empty() ? m.name : ", " + m.name;
    }
    throw DomainError("unknown material '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace fluxbcs::bcs
