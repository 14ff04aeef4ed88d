#include "fluxbcs/cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "fluxbcs/cli/csv_io.hpp"
#include "fluxbcs/error.hpp"
#include "fluxbcs/microstate.hpp"

namespace fluxbcs::cli {

using nlohmann::ordered_json;
using phys::Energy;
using phys::Temperature;

namespace {

constexpr double kFig1MuMin = 0.495;
constexpr double kFig1MuMax = 0.505;
constexpr double kFig1Step = 1e-4;
constexpr double kFig2Min = 0.01;
constexpr double kFig2Max = 1.0;
constexpr double kFig2Step = 0.01;
constexpr std::uint64_t kReproduceSeed = 42;
constexpr double kReproduceNoiseGhz = 0.05;

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw OutputError("cannot write " + path.string());
    }
    return f;
}

void close_output(std::ofstream& f, const std::filesystem::path& path) {
    f.close();
    if (!f) {
        throw OutputError("error while writing " + path.string());
    }
}

// Writes to `path` when given, otherwise to `fallback`.
void emit(const std::optional<std::string>& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
    if (!path) {
        write(fallback);
        return;
    }
    auto f = open_output(*path);
    write(f);
    close_output(f, *path);
}

void write_json_file(const std::filesystem::path& path, const ordered_json& doc) {
    auto f = open_output(path);
    f << doc.dump(2) << '\n';
    close_output(f, path);
}

qubit::QubitParams make_params(double el_ghz, double ej_ghz, double delta) {
    qubit::QubitParams p{phys::energy_from_ghz(el_ghz), phys::energy_from_ghz(ej_ghz), delta};
    p.validate();
    return p;
}

ordered_json fit_json(const fit::FitResult& r) {
    ordered_json j;
    j["el_ghz"] = phys::energy_in_ghz(r.params.E_L);
    j["ej_ghz"] = phys::energy_in_ghz(r.params.E_J);
    j["delta"] = r.params.delta;
    j["residual_rms_ghz"] = phys::in_ghz(r.residual_rms);
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    j["stderr_el_ghz"] = std::sqrt(std::max(r.covariance(0, 0), 0.0)) * 1e-9;
    j["stderr_ej_ghz"] = std::sqrt(std::max(r.covariance(1, 1), 0.0)) * 1e-9;
    j["stderr_delta"] = std::sqrt(std::max(r.covariance(2, 2), 0.0));
    return j;
}

ordered_json density_json(const DensityReport& d) {
    ordered_json j;
    j["material"] = d.material;
    j["el_ghz"] = d.el_ghz;
    j["K"] = d.pair_states;
    j["volume_cm3"] = d.volume_cm3;
    j["kappa_cp_cm3"] = d.kappa_cp_cm3;
    j["n0_per_joule"] = d.n0_per_joule;
    j["hbar_omega_c_over_2kb_K"] = d.cutoff_over_2kb_K;
    j["material_tc_K"] = d.material_tc_K;
    j["published"] = {
        {"K", published::pair_states},
        {"volume_cm3", published::volume_cm3},
        {"kappa_cp_cm3", published::kappa_cp_cm3},
        {"hbar_omega_c_over_2kb_K", published::cutoff_over_2kb_K},
    };
    return j;
}

ordered_json coupling_json(const CouplingReport& c) {
    ordered_json j;
    j["tc_K"] = c.tc_K;
    j["theta_d_K"] = c.theta_d_K;
    j["g_over_kb_K"] = c.g_over_kb_K;
    j["g_over_ED"] = c.g_over_ED;
    j["tc_strong_coupling_K"] = c.tc_strong_K;
    return j;
}

void print_density(std::ostream& out, const DensityReport& d) {
    out << fmt::format("material                 {}\n", d.material);
    out << fmt::format("E_L/h                    {:.10g} GHz\n", d.el_ghz);
    out << fmt::format("K                        {:.6g}  (published {:.3g})\n", d.pair_states,
                       published::pair_states);
    out << fmt::format("volume                   {:.6g} cm^3  (published {:.3g})\n", d.volume_cm3,
                       published::volume_cm3);
    out << fmt::format("kappa_CP                 {:.6g} cm^-3  (published {:.3g})\n", d.kappa_cp_cm3,
                       published::kappa_cp_cm3);
    out << fmt::format("N(0)                     {:.6g} J^-1\n", d.n0_per_joule);
    out << fmt::format("hbar*omega_c/2k_B        {:.6g} K  (published {:.3g})\n", d.cutoff_over_2kb_K,
                       published::cutoff_over_2kb_K);
    out << fmt::format("T_c ({})                 {:.6g} K\n", d.material, d.material_tc_K);
}

struct Options {
    std::optional<std::string> data;
    std::optional<std::string> out;
    std::optional<double> el_ghz;
    std::optional<double> ej_ghz;
    std::optional<double> delta;
    std::optional<std::string> range;
    double length_um = 20.0;
    double width_nm = 450.0;
    double thickness_nm = 80.0;
    std::string material = "Al";
    std::optional<std::string> materials_file;
    std::optional<double> theta_d_K;
    std::optional<double> tc_K;
    double noise_ghz = 0.0;
    std::uint64_t seed = 42;
    std::optional<std::size_t> points;
    int pairs = 1;
    int mmax = 1;
    int kmax = 2;
    double mu_ext = 0.4;
};

qubit::Geometry geometry_from(const Options& o) {
    return qubit::Geometry::from_perimeter(o.length_um * 1e-6, o.width_nm * 1e-9, o.thickness_nm * 1e-9);
}

int cmd_fit(const Options& o, std::ostream& out) {
    const auto data = read_resonance_csv(*o.data);
    std::optional<qubit::QubitParams> initial;
    if (o.el_ghz || o.ej_ghz || o.delta) {
        const auto guess = fit::initial_guess(data);
        initial = make_params(o.el_ghz.value_or(phys::energy_in_ghz(guess.E_L)),
                              o.ej_ghz.value_or(phys::energy_in_ghz(guess.E_J)),
                              o.delta.value_or(guess.delta));
    }
    const auto r = fit::fit_spectrum(data, initial);
    const auto j = fit_json(r);
    out << fmt::format("points         {}\n", data.size());
    out << fmt::format("E_L/h          {:.10g} GHz  (+/- {:.3g})\n", j["el_ghz"].get<double>(),
                       j["stderr_el_ghz"].get<double>());
    out << fmt::format("E_J/h          {:.10g} GHz  (+/- {:.3g})\n", j["ej_ghz"].get<double>(),
                       j["stderr_ej_ghz"].get<double>());
    out << fmt::format("delta          {:.10g}  (+/- {:.3g})\n", r.params.delta, j["stderr_delta"].get<double>());
    out << fmt::format("residual RMS   {:.6g} GHz\n", phys::in_ghz(r.residual_rms));
    out << fmt::format("iterations     {}\n", r.iterations);
    out << fmt::format("converged      {}\n", r.converged ? "true" : "false");
    if (o.out) {
        write_json_file(*o.out, j);
    }
    return r.converged ? kExitOk : kExitDomain;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
    const auto params = make_params(o.el_ghz.value_or(published::el_ghz), o.ej_ghz.value_or(published::ej_ghz),
                                    o.delta.value_or(0.0));
    const Range r = o.range ? parse_range(*o.range) : Range{kFig1MuMin, kFig1MuMax, kFig1Step};
    if (!r.step) {
        throw ParseError("--range for spectrum needs a step: a:b:step");
    }
    const auto curve = qubit::spectrum_curve(params, r.lo, r.hi, *r.step);
    emit(o.out, out, [&](std::ostream& s) { write_curves_csv(s, {curve}); });
    return kExitOk;
}

int cmd_density(const Options& o, std::ostream& out, std::ostream& err) {
    double el_ghz = o.el_ghz.value_or(published::el_ghz);
    if (o.data) {
        std::ifstream in(*o.data);
        if (!in) {
            throw ParseError("cannot open fit result " + *o.data);
        }
        try {
            el_ghz = nlohmann::json::parse(in).at("el_ghz").get<double>();
        } catch (const nlohmann::json::exception& ex) {
            throw ParseError(*o.data + ": " + ex.what());
        }
    }
    const auto registry = load_registry(o.materials_file);
    const auto geometry = geometry_from(o);
    const auto report = compute_density(phys::energy_from_ghz(el_ghz), geometry, registry.get(o.material));
    if (report.thickness_warning) {
        err << fmt::format("warning: line thickness {} nm exceeds {} nm; uniform current density is not assured\n",
                           o.thickness_nm, qubit::kUniformThicknessLimit * 1e9);
    }
    print_density(out, report);
    if (o.out) {
        write_json_file(*o.out, density_json(report));
    }
    return kExitOk;
}

int cmd_tc_curve(const Options& o, std::ostream& out) {
    const Range r = o.range ? parse_range(*o.range) : Range{kFig2Min, kFig2Max, kFig2Step};
    if (!r.step) {
        throw ParseError("--range for tc-curve needs a step: a:b:step");
    }
    const auto curves = tc_curves(phys::kelvin(o.theta_d_K.value_or(428.0)), r);
    emit(o.out, out, [&](std::ostream& s) { write_curves_csv(s, curves); });
    return kExitOk;
}

int cmd_invert_g(const Options& o, std::ostream& out) {
    std::optional<double> tc = o.tc_K;
    std::optional<double> theta = o.theta_d_K;
    if (!tc || !theta) {
        const auto& m = load_registry(o.materials_file).get(o.material);
        tc = tc.value_or(m.T_c.value);
        theta = theta.value_or(m.Theta_D.value);
    }
    const auto c = compute_coupling(phys::kelvin(*tc), phys::kelvin(*theta));
    out << fmt::format("T_c                {:.6g} K\n", c.tc_K);
    out << fmt::format("Theta_D            {:.6g} K\n", c.theta_d_K);
    out << fmt::format("g/k_B              {:.6g} K\n", c.g_over_kb_K);
    out << fmt::format("g/E_D              {:.6g}\n", c.g_over_ED);
    out << fmt::format("T_c at k_BT_c=g/2  {:.6g} K\n", c.tc_strong_K);
    if (o.out) {
        write_json_file(*o.out, coupling_json(c));
    }
    return kExitOk;
}

int cmd_microstate(const Options& o, std::ostream& out) {
    const Energy E_L = phys::energy_from_ghz(o.el_ghz.value_or(published::el_ghz));
    if (!(E_L.value > 0.0)) {
        throw DomainError("E_L must be positive");
    }
    const auto rep = micro::analyze_sectors(o.kmax, o.mmax, o.pairs, o.mu_ext, E_L);
    out << fmt::format("configurations     {}\n", rep.configuration_count);
    out << "sector minima (F: E/h GHz)\n";
    for (const auto& [F, E] : rep.sector_minimum) {
        out << fmt::format("  {:>3}: {:.10g}\n", F, phys::energy_in_ghz(E));
    }
    out << fmt::format("ground sector F    {}\n", rep.ground_flux);
    out << fmt::format("ground energy      {:.10g} GHz\n", phys::energy_in_ghz(rep.ground_energy));
    out << fmt::format("degeneracy         {}\n", rep.ground_configurations.size());
    out << "degenerate sectors";
    for (int F : rep.degenerate_sectors) out << ' ' << F;
    out << '\n';
    if (o.out) {
        ordered_json j;
        j["configurations"] = rep.configuration_count;
        ordered_json minima = ordered_json::object();
        for (const auto& [F, E] : rep.sector_minimum) minima[std::to_string(F)] = phys::energy_in_ghz(E);
        j["sector_minimum_ghz"] = minima;
        j["ground_flux"] = rep.ground_flux;
        j["degeneracy"] = rep.ground_configurations.size();
        j["degenerate_sectors"] = rep.degenerate_sectors;
        write_json_file(*o.out, j);
    }
    return kExitOk;
}

int cmd_synth(const Options& o, std::ostream& out) {
    const auto params = make_params(o.el_ghz.value_or(published::el_ghz), o.ej_ghz.value_or(published::ej_ghz),
                                    o.delta.value_or(0.0));
    const Range r = o.range ? parse_range(*o.range) : Range{kFig1MuMin, kFig1MuMax, kFig1Step};
    std::size_t n = 101;
    if (o.points) {
        n = *o.points;
    } else if (r.step) {
        n = sample_grid(r.lo, r.hi, *r.step).size();
    }
    const auto data = fit::synthesize_data(params, r.lo, r.hi, n, phys::gigahertz(o.noise_ghz), o.seed);
    emit(o.out, out, [&](std::ostream& s) { write_resonance_csv(s, data); });
    return kExitOk;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
    const auto rows = reproduce(o.out.value_or("reproduce_out"), load_registry(o.materials_file));
    out << fmt::format("{:<28} {:>16} {:>12} {:>10}\n", "quantity", "computed", "published", "rel_diff");
    for (const auto& row : rows) {
        out << fmt::format("{:<28} {:>16.6g} {:>12.4g} {:>+9.3f}%\n", row.quantity, row.computed, row.published,
                           100.0 * row.rel_diff());
    }
    return kExitOk;
}

}  // namespace

Range parse_range(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || !std::isfinite(v)) {
            throw ParseError("range '" + text + "': '" + item + "' is not a number");
        }
        parts.push_back(v);
    }
    if (parts.size() < 2 || parts.size() > 3 || text.back() == ':') {
        throw ParseError("range '" + text + "' must look like a:b or a:b:step");
    }
    Range r{parts[0], parts[1], std::nullopt};
    if (parts.size() == 3) {
        r.step = parts[2];
    }
    return r;
}

DensityReport compute_density(Energy E_L, const qubit::Geometry& geometry, const bcs::Material& material) {
    DensityReport d;
    d.material = material.name;
    d.el_ghz = phys::energy_in_ghz(E_L);
    const double kappa_el = material.require_kappa_el();
    d.pair_states = qubit::k_from_loop_energy(E_L, geometry);
    const double volume = qubit::sample_volume(geometry);
    d.volume_cm3 = volume * 1e6;
    d.kappa_cp_cm3 = qubit::cooper_pair_density(d.pair_states, volume);
    d.n0_per_joule = bcs::density_of_states(kappa_el, volume);
    const Energy cutoff = bcs::cutoff_from_k(d.pair_states, d.n0_per_joule);
    d.cutoff_over_2kb_K = phys::energy_to_kelvin(cutoff).value / 2.0;
    d.material_tc_K = material.T_c.value;
    d.thickness_warning = geometry.thickness_warning();
    return d;
}

CouplingReport compute_coupling(Temperature T_c, Temperature Theta_D) {
    const Energy E_D = phys::kelvin_to_energy(Theta_D);
    const Energy g = bcs::invert_coupling(T_c, E_D);
    CouplingReport c;
    c.tc_K = T_c.value;
    c.theta_d_K = Theta_D.value;
    c.g_over_kb_K = phys::energy_to_kelvin(g).value;
    c.g_over_ED = g / E_D;
    c.tc_strong_K = bcs::tc_strong_coupling(g).value;
    return c;
}

std::vector<CurveSeries> tc_curves(Temperature Theta_D, const Range& range) {
    if (!range.step) {
        throw ParseError("coupling range needs a step");
    }
    const Energy E_D = phys::kelvin_to_energy(Theta_D);
    return {bcs::tc_curve(E_D, bcs::Hypothesis::DebyeCutoff, range.lo, range.hi, *range.step),
            bcs::tc_curve(E_D, bcs::Hypothesis::StrongCoupling, range.lo, range.hi, *range.step)};
}

bcs::MaterialRegistry load_registry(const std::optional<std::string>& materials_file) {
    if (materials_file) {
        return bcs::MaterialRegistry::from_file(*materials_file);
    }
    if (const char* env = std::getenv("FLUXBCS_MATERIALS"); env != nullptr && *env != '\0') {
        return bcs::MaterialRegistry::from_file(env);
    }
    return bcs::MaterialRegistry::builtin();
}

std::vector<SummaryRow> reproduce(const std::filesystem::path& out_dir, const bcs::MaterialRegistry& registry) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw OutputError("cannot create " + out_dir.string() + ": " + ec.message());
    }
    std::vector<SummaryRow> rows;

    // Spectrum at the published fit parameters.
    const auto params = make_params(published::el_ghz, published::ej_ghz, 0.0);
    const auto fig1 = qubit::spectrum_curve(params, kFig1MuMin, kFig1MuMax, kFig1Step);
    {
        const auto path = out_dir / "fig1.csv";
        auto f = open_output(path);
        write_curves_csv(f, {fig1});
        close_output(f, path);
    }
    double f_min = fig1[0].y;
    for (const auto& pt : fig1.points()) f_min = std::min(f_min, pt.y);
    rows.push_back({"fig1 minimum f (GHz)", f_min, published::ej_ghz});

    // Round trip through noisy synthetic data and the fitter.
    const auto synth = fit::synthesize_data(params, kFig1MuMin, kFig1MuMax, 201,
                                            phys::gigahertz(kReproduceNoiseGhz), kReproduceSeed);
    const auto fitted = fit::fit_spectrum(synth);
    rows.push_back({"fitted E_L/h (GHz)", phys::energy_in_ghz(fitted.params.E_L), published::el_ghz});
    rows.push_back({"fitted E_J/h (GHz)", phys::energy_in_ghz(fitted.params.E_J), published::ej_ghz});

    const auto& al = registry.get("Al");
    const auto geometry = qubit::Geometry::from_perimeter(20e-6, 450e-9, 80e-9);
    const auto density = compute_density(params.E_L, geometry, al);
    write_json_file(out_dir / "density_report.json", density_json(density));
    rows.push_back({"K", density.pair_states, published::pair_states});
    rows.push_back({"volume (cm^3)", density.volume_cm3, published::volume_cm3});
    rows.push_back({"kappa_CP (cm^-3)", density.kappa_cp_cm3, published::kappa_cp_cm3});
    rows.push_back({"hbar*omega_c/2k_B (K)", density.cutoff_over_2kb_K, published::cutoff_over_2kb_K});

    ordered_json couplings = ordered_json::object();
    struct Target {
        const char* name;
        double g_K;
        double tc_strong_K;
    };
    for (const Target t : {Target{"Al", published::g_al_K, published::tc_strong_al_K},
                           Target{"Nb", published::g_nb_K, published::tc_strong_nb_K}}) {
        const auto& m = registry.get(t.name);
        const auto c = compute_coupling(m.T_c, m.Theta_D);
        couplings[t.name] = coupling_json(c);
        rows.push_back({fmt::format("g/k_B {} (K)", t.name), c.g_over_kb_K, t.g_K});
        rows.push_back({fmt::format("T_c at g/2, {} (K)", t.name), c.tc_strong_K, t.tc_strong_K});
    }
    write_json_file(out_dir / "couplings_report.json", couplings);

    {
        const auto path = out_dir / "fig2.csv";
        auto f = open_output(path);
        write_curves_csv(f, tc_curves(al.Theta_D, Range{kFig2Min, kFig2Max, kFig2Step}));
        close_output(f, path);
    }

    {
        const auto path = out_dir / "summary.csv";
        auto f = open_output(path);
        f << "quantity,computed,published,rel_diff\n";
        for (const auto& row : rows) {
            f << row.quantity << ',' << format_number(row.computed) << ',' << format_number(row.published) << ','
              << format_number(row.rel_diff()) << '\n';
        }
        close_output(f, path);
    }
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flux-qubit spectrum fitting, Cooper-pair counting and BCS cutoff analysis", "fluxbcs"};
    app.require_subcommand(1);
    Options o;

    const auto add_out = [&](CLI::App* sub, const char* what) { sub->add_option("--out", o.out, what); };
    const auto add_params = [&](CLI::App* sub) {
        sub->add_option("--el-ghz", o.el_ghz, "E_L/h in GHz (default 1500)");
        sub->add_option("--ej-ghz", o.ej_ghz, "E_J/h in GHz (default 0.66)");
        sub->add_option("--delta", o.delta, "flux offset in Phi_0 units (default 0)");
    };
    const auto add_materials = [&](CLI::App* sub) {
        sub->add_option("--material", o.material, "material name in the registry")->capture_default_str();
        sub->add_option("--materials-file", o.materials_file, "materials.json (overrides $FLUXBCS_MATERIALS)");
    };

    auto* fit = app.add_subcommand("fit", "fit E_L, E_J and delta to mu_ext,f_ghz[,sigma_ghz] data");
    fit->add_option("--data", o.data, "input CSV")->required();
    fit->add_option("--el-ghz", o.el_ghz, "initial E_L/h in GHz");
    fit->add_option("--ej-ghz", o.ej_ghz, "initial E_J/h in GHz");
    fit->add_option("--delta", o.delta, "initial flux offset");
    add_out(fit, "write the fit result as JSON");

    auto* spectrum = app.add_subcommand("spectrum", "sample the qubit frequency over a flux range");
    add_params(spectrum);
    spectrum->add_option("--range", o.range, "mu_min:mu_max:step (default 0.495:0.505:0.0001)");
    add_out(spectrum, "CSV output path (stdout if omitted)");

    auto* density = app.add_subcommand("density", "Cooper-pair count, density and BCS cutoff from E_L");
    density->add_option("--el-ghz", o.el_ghz, "E_L/h in GHz (default 1500)");
    density->add_option("--data", o.data, "take el_ghz from a fit JSON result");
    density->add_option("--length-um", o.length_um, "loop perimeter in um")->capture_default_str();
    density->add_option("--width-nm", o.width_nm, "line width in nm")->capture_default_str();
    density->add_option("--thickness-nm", o.thickness_nm, "line thickness in nm")->capture_default_str();
    add_materials(density);
    add_out(density, "write the report as JSON");

    auto* tc_curve = app.add_subcommand("tc-curve", "k_B T_c / E_D against g / E_D under both cutoff choices");
    tc_curve->add_option("--theta-d-K", o.theta_d_K, "Debye temperature in K (default 428)");
    tc_curve->add_option("--range", o.range, "g_min:g_max:step in E_D units (default 0.01:1:0.01)");
    add_out(tc_curve, "CSV output path (stdout if omitted)");

    auto* invert = app.add_subcommand("invert-g", "coupling needed for T_c with a Debye cutoff");
    invert->add_option("--tc-K", o.tc_K, "critical temperature in K");
    invert->add_option("--theta-d-K", o.theta_d_K, "Debye temperature in K");
    add_materials(invert);
    add_out(invert, "write the report as JSON");

    auto* microstate = app.add_subcommand("microstate", "brute-force flux sectors of a small occupation model");
    microstate->add_option("--kmax", o.kmax, "pair states K")->capture_default_str();
    microstate->add_option("--mmax", o.mmax, "largest |mu| M")->capture_default_str();
    microstate->add_option("--pairs", o.pairs, "number of pairs")->capture_default_str();
    microstate->add_option("--mu-ext", o.mu_ext, "external flux in Phi_0 units")->capture_default_str();
    microstate->add_option("--el-ghz", o.el_ghz, "E_L/h in GHz (default 1500)");
    add_out(microstate, "write the report as JSON");

    auto* synth = app.add_subcommand("synth", "synthetic resonance data from the spectrum model");
    add_params(synth);
    synth->add_option("--range", o.range, "mu_min:mu_max[:step] (default 0.495:0.505:0.0001)");
    synth->add_option("--points", o.points, "number of points (overrides the range step)");
    synth->add_option("--noise-ghz", o.noise_ghz, "Gaussian noise sigma in GHz")->capture_default_str();
    synth->add_option("--seed", o.seed, "random seed")->capture_default_str();
    add_out(synth, "CSV output path (stdout if omitted)");

    auto* repro = app.add_subcommand("reproduce", "regenerate every figure table and report");
    repro->add_option("--out", o.out, "output directory (default reproduce_out)");
    repro->add_option("--materials-file", o.materials_file, "materials.json (overrides $FLUXBCS_MATERIALS)");

    std::vector<std::string> argv_storage{"fluxbcs"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (fit->parsed()) return cmd_fit(o, out);
        if (spectrum->parsed()) return cmd_spectrum(o, out);
        if (density->parsed()) return cmd_density(o, out, err);
        if (tc_curve->parsed()) return cmd_tc_curve(o, out);
        if (invert->parsed()) return cmd_invert_g(o, out);
        if (microstate->parsed()) return cmd_microstate(o, out);
        if (synth->parsed()) return cmd_synth(o, out);
        if (repro->parsed()) return cmd_reproduce(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const OutputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace fluxbcs::cli
