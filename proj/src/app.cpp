#include "sqm/app.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "sqm/bohlin.hpp"
#include "sqm/fock.hpp"
#include "sqm/perturbation.hpp"
#include "sqm/spectroscopy.hpp"
#include "sqm/verify.hpp"
#include "sqm/wigner.hpp"

namespace sqm {

namespace {

namespace fs = std::filesystem;

using Outputs = std::map<std::string, std::string>;

void commit(const fs::path& dir, const Outputs& files) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) fail(ErrorCode::IoError, fmt::format("cannot create output directory '{}': {}", dir.string(), ec.message()));
    std::vector<std::pair<fs::path, fs::path>> staged;
    for (const auto& [name, content] : files) {
        const fs::path target = dir / name;
        const fs::path tmp = dir / ("." + name + ".tmp");
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << content;
        f.close();
        if (!f) {
            for (const auto& s : staged) fs::remove(s.first, ec);
            fs::remove(tmp, ec);
            fail(ErrorCode::IoError, fmt::format("cannot write '{}'", tmp.string()));
        }
        staged.emplace_back(tmp, target);
    }
    for (const auto& [tmp, target] : staged) {
        fs::rename(tmp, target, ec);
        if (ec) fail(ErrorCode::IoError, fmt::format("cannot move '{}' into place: {}", target.string(), ec.message()));
    }
}

PhaseFunction corrected_wigner(const RunConfig& cfg, double omega) {
    const auto state = first_order_coefficients(cfg.label, cfg.params, omega);
    return wigner_of(state.to_phase_function()).function;
}

std::string spectrum_text(const SpectrumResult& r, const std::vector<ComparisonRow>& rows) {
    std::ostringstream s;
    write_spectrum_report(s, r, rows);
    return s.str();
}

void spectrum(const RunConfig& cfg, Outputs& files, std::ostream& out) {
    const auto r = mass(cfg.label, cfg.params);
    const auto rows = comparison_report(r);
    std::ostringstream csv;
    write_comparison_csv(csv, rows);
    files["spectrum.csv"] = csv.str();
    files["report.txt"] = spectrum_text(r, rows);
    out << files["report.txt"];
}

void wigner(const RunConfig& cfg, Outputs& files, std::ostream& out) {
    const double omega = resolve_omega(cfg.label, cfg.params);
    const auto f = corrected_wigner(cfg, omega);
    for (double p1 : cfg.slice.p1_values) {
        SliceSpec spec = cfg.slice;
        spec.p1_values = {p1};
        const auto slice = evaluate_slice(f, spec, fmt::format("({},{})", cfg.label.n1, cfg.label.n2));
        std::ostringstream csv;
        write_slice_csv(csv, slice);
        const std::string name = fmt::format("wigner_p1_{:g}.csv", p1);
        files[name] = csv.str();
        out << fmt::format("{}: {} nodes, max {:.9g}, min {:.9g}\n", name, slice.values.size(), slice.max_value(),
                           slice.min_value());
    }
}

void negativity_cmd(const RunConfig& cfg, Outputs& files, std::ostream& out) {
    const double omega = resolve_omega(cfg.label, cfg.params);
    const auto f = corrected_wigner(cfg, omega);
    const auto r = negativity(f);
    const auto slice = evaluate_slice(f, cfg.slice);
    files["negativity.csv"] = fmt::format(
        "min_value,negative_volume,q1,p1,q2,p2,captured_fraction,slice_min\n"
        "{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g}\n",
        r.min_value, r.negative_volume, r.grid_min_location.q1, r.grid_min_location.p1, r.grid_min_location.q2,
        r.grid_min_location.p2, r.captured_fraction, slice.min_value());
    out << fmt::format("omega {:.6f}\nmin {:.9g} at (q1={:.6g}, p1={:.6g}, q2={:.6g}, p2={:.6g})\neta {:.9g}\n"
                       "configured slice min {:.9g}\n",
                       omega, r.min_value, r.grid_min_location.q1, r.grid_min_location.p1, r.grid_min_location.q2,
                       r.grid_min_location.p2, r.negative_volume, slice.min_value());
}

std::vector<FixtureComparison> fixture_comparisons(const RunConfig& cfg) {
    std::vector<FixtureComparison> all;
    for (auto which : {Fixture::Ground, Fixture::Excited10, Fixture::Excited01}) {
        const auto label = reference_state_fixture(which).label;
        all.push_back(compare_fixture(which, cfg.params, resolve_omega(label, cfg.params)));
    }
    return all;
}

void diagnose(const RunConfig& cfg, Outputs& files, std::ostream& out) {
    const auto report = diagnostic_compare(4);
    std::ostringstream csv;
    write_diagnostic_csv(csv, report);
    files["diagnostic.csv"] = csv.str();
    std::ostringstream fx;
    write_fixture_csv(fx, fixture_comparisons(cfg));
    files["fixtures.csv"] = fx.str();
    const auto* g = report.find({0, 0, 0, 0});
    out << fmt::format("appendix vs oracle: {} pairs, max |diff| {:.6g}, (0,0;0,0) oracle {:.6g} appendix {:.6g}\n",
                       report.rows.size(), report.max_abs_diff, g->oracle, g->appendix);
}

int verify(const RunConfig& cfg, Outputs& files, std::ostream& out) {
    const auto results = run_verification_suite(cfg.params);
    std::ostringstream text;
    write_verification(text, results);
    files["verify.txt"] = text.str();
    out << text.str();
    return all_passed(results) ? kExitOk : kExitVerification;
}

void report(const RunConfig& cfg, Outputs& files, std::ostream& out) {
    std::ostringstream s;
    s << "== spectrum ==\n";
    const auto r = mass(cfg.label, cfg.params);
    s << spectrum_text(r, comparison_report(r));

    s << "\n== wigner negativity ==\n";
    try {
        const auto f = corrected_wigner(cfg, r.omega);
        const auto n = negativity(f);
        s << fmt::format("min {:.9g} at (q1={:.6g}, p1={:.6g}, q2={:.6g}, p2={:.6g})\neta {:.9g}\n", n.min_value,
                         n.grid_min_location.q1, n.grid_min_location.p1, n.grid_min_location.q2, n.grid_min_location.p2,
                         n.negative_volume);
        s << fmt::format("configured slice min {:.9g}, max {:.9g}\n", evaluate_slice(f, cfg.slice).min_value(),
                         evaluate_slice(f, cfg.slice).max_value());
    } catch (const Error& e) {
        s << fmt::format("unavailable: {} {}\n", to_string(e.code()), e.what());
    }

    s << "\n== appendix vs oracle ==\n";
    const auto d = diagnostic_compare(4);
    const auto* g = d.find({0, 0, 0, 0});
    s << fmt::format("pairs {}, max |diff| {:.6g}, (0,0;0,0) oracle {:.6g} appendix {:.6g} delta1 {:.6g}\n",
                     d.rows.size(), d.max_abs_diff, g->oracle, g->appendix, *g->delta1);

    s << "\n== printed vs generated coefficients (per unit gamma) ==\n";
    for (const auto& c : fixture_comparisons(cfg)) {
        s << fmt::format("{} (omega {:.6f}){}\n", to_string(c.which), c.omega, c.error.empty() ? "" : " " + c.error);
        for (const auto& row : c.rows)
            s << fmt::format("  ({},{})  printed {:>12.4f}  generated {:>12.4f}\n", row.m.first, row.m.second,
                             row.printed_per_gamma, row.generated_per_gamma);
    }

    s << "\n== hamiltonian consistency at (q1,q2,p1,p2) = (0.8,0.6,0.3,-0.2) ==\n";
    const auto h = hamiltonian_consistency({0.8, 0.6, 0.3, -0.2}, cfg.params);
    s << fmt::format("kinetic residual      {:.3e}\ndiamagnetic residual  {:.3e}\ncornell residual      {:.6g}\n"
                     "spin coefficient ratio {:.6g}\n",
                     h.kinetic_residual, h.diamagnetic_residual, h.cornell_residual, h.spin_ratio);
    files["summary.txt"] = s.str();
    out << s.str();
}

}  // namespace

int exit_code_for(ErrorCode code) {
    return code == ErrorCode::ConfigError || code == ErrorCode::IoError ? kExitConfig : kExitDomain;
}

int run_command(const std::string& command, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        cfg.params.validate();
        cfg.label.validate();
        Outputs files;
        int status = kExitOk;
        if (command == "spectrum")
            spectrum(cfg, files, out);
        else if (command == "wigner")
            wigner(cfg, files, out);
        else if (command == "negativity")
            negativity_cmd(cfg, files, out);
        else if (command == "verify")
            status = verify(cfg, files, out);
        else if (command == "report")
            report(cfg, files, out);
        else if (command == "diagnose")
            diagnose(cfg, files, out);
        else
            fail(ErrorCode::ConfigError, fmt::format("unknown command '{}'", command));
        commit(cfg.out_dir, files);
        if (status == kExitVerification) err << "ERROR VERIFICATION_FAILED: invariant suite reported failures\n";
        return status;
    } catch (const Error& e) {
        err << fmt::format("ERROR {}: {}\n", to_string(e.code()), e.what());
        return exit_code_for(e.code());
    }
}

}  // namespace sqm
