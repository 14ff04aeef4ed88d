#pragma once

// The fluxbcs command-line surface. Each command has a computational core
// returning a plain struct (used by tests) and a renderer used by run().

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fluxbcs/bcs.hpp"
#include "fluxbcs/fitkit.hpp"
#include "fluxbcs/fluxqubit.hpp"
#include "fluxbcs/materials.hpp"

namespace fluxbcs::cli {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,   // bad flags, unreadable or malformed input
    kExitDomain = 2,  // valid syntax but the computation is impossible
};

/// Failure writing an output file; reported with kExitDomain.
class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reference values, reported next to the computed numbers.
namespace published {
inline constexpr double el_ghz = 1500.0;
inline constexpr double ej_ghz = 0.66;
inline constexpr double pair_states = 3.3e6;
inline constexpr double volume_cm3 = 0.72e-12;
inline constexpr double kappa_cp_cm3 = 2.5e18;
inline constexpr double cutoff_over_2kb_K = 1.3;
inline constexpr double g_al_K = 72.0;
inline constexpr double g_nb_K = 80.0;
inline constexpr double tc_strong_al_K = 36.0;
inline constexpr double tc_strong_nb_K = 40.0;
}  // namespace published

/// `a:b` or `a:b:step`.
struct Range {
    double lo = 0.0;
    double hi = 0.0;
    std::optional<double> step;
};
Range parse_range(const std::string& text);

struct DensityReport {
    std::string material;
    double el_ghz = 0.0;
    double pair_states = 0.0;             // K
    double volume_cm3 = 0.0;
    double kappa_cp_cm3 = 0.0;
    double n0_per_joule = 0.0;
    double cutoff_over_2kb_K = 0.0;       // hbar omega_c / 2 k_B
    double material_tc_K = 0.0;
    bool thickness_warning = false;
};
DensityReport compute_density(phys::Energy E_L, const qubit::Geometry& geometry, const bcs::Material& material);

struct CouplingReport {
    double tc_K = 0.0;
    double theta_d_K = 0.0;
    double g_over_kb_K = 0.0;
    double g_over_ED = 0.0;
    double tc_strong_K = 0.0;   // same g under k_B T_c = g/2
};
CouplingReport compute_coupling(phys::Temperature T_c, phys::Temperature Theta_D);

/// Fig. 2 table: g_over_ED, kbTc_over_ED_eq7, kbTc_over_ED_eq10.
std::vector<CurveSeries> tc_curves(phys::Temperature Theta_D, const Range& range);

struct SummaryRow {
    std::string quantity;
    double computed = 0.0;
    double published = 0.0;
    double rel_diff() const { return (computed - published) / published; }
};

/// Writes fig1.csv, fig2.csv, density_report.json, couplings_report.json and
/// summary.csv into out_dir and returns the summary rows.
std::vector<SummaryRow> reproduce(const std::filesystem::path& out_dir, const bcs::MaterialRegistry& registry);

/// Registry selection: explicit file, else $FLUXBCS_MATERIALS, else built-in.
bcs::MaterialRegistry load_registry(const std::optional<std::string>& materials_file);

/// Parses and runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fluxbcs::cli
