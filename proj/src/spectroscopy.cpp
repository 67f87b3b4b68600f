#include "sqm/spectroscopy.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "sqm/fock.hpp"

namespace sqm {

SpectrumResult mass(const StateLabel& label, const ModelParams& params) {
    params.validate();
    SpectrumResult r;
    r.label = label;
    r.omega = resolve_omega(label, params);
    r.delta1 = delta1(label.n1, label.n2);
    r.prefactor_mode = params.prefactor_mode;
    r.energy = energy1(label, params, r.omega);
    r.mass = params.m_q + params.m_qbar + r.energy.modulus;
    return r;
}

const std::vector<LiteratureValue>& literature_masses() {
    static const std::vector<LiteratureValue> values{
        {"lit_1", 3.074}, {"lit_2", 3.078}, {"lit_3", 3.098}, {"lit_4", 3.1003},
        {"lit_5", 3.0966}, {"lit_6", 3.0954}, {"lit_7", 3.095},
    };
    return values;
}

double relative_error_pct(double m) { return std::abs(m - kExperimentalMass) / kExperimentalMass * 100.0; }

std::vector<ComparisonRow> comparison_report(const SpectrumResult& result) {
    std::vector<ComparisonRow> rows;
    rows.push_back({"present", result.mass, relative_error_pct(result.mass)});
    rows.push_back({"experiment", kExperimentalMass, 0.0});
    for (const auto& lit : literature_masses()) rows.push_back({lit.source, lit.mass, relative_error_pct(lit.mass)});
    return rows;
}

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
    out << "source,mass_gev,rel_err_pct\n";
    for (const auto& r : rows) out << fmt::format("{},{:.6f},{:.6f}\n", r.source, r.mass, r.relative_error_pct);
}

std::string to_string(PrefactorMode mode) { return mode == PrefactorMode::Enecor ? "enecor" : "b21"; }

void write_spectrum_report(std::ostream& out, const SpectrumResult& r, const std::vector<ComparisonRow>& rows) {
    out << fmt::format("state            ({},{}) spin {:+d}\n", r.label.n1, r.label.n2, r.label.spin);
    out << fmt::format("prefactor mode   {}\n", to_string(r.prefactor_mode));
    out << fmt::format("omega            {:.6f} GeV\n", r.omega);
    out << fmt::format("delta1           {:.6f}\n", r.delta1);
    out << fmt::format("E1               {:.6f} GeV\n", r.energy.signed_value);
    out << fmt::format("|E1|             {:.6f} GeV\n", r.energy.modulus);
    out << fmt::format("mass             {:.4f} GeV\n", r.mass);
    out << fmt::format("reference mass   {:.4f} GeV (deviation {:+.4f})\n", kReferenceModelMass, r.mass - kReferenceModelMass);
    out << "\nsource        mass_gev   rel_err_pct\n";
    for (const auto& row : rows) out << fmt::format("{:<12}  {:<9.4f}  {:.4f}\n", row.source, row.mass, row.relative_error_pct);
}

}  // namespace sqm
