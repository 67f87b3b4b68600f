#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sqm/model.hpp"
#include "sqm/perturbation.hpp"

namespace sqm {

/// J/psi mass, GeV.
inline constexpr double kExperimentalMass = 3.0969;

/// Published ground-state mass of this model, GeV; the report shows the
/// deviation of the computed mass from it.
inline constexpr double kReferenceModelMass = 3.1006;

struct SpectrumResult {
    StateLabel label;
    double omega = 0.0;
    double delta1 = 0.0;
    PrefactorMode prefactor_mode = PrefactorMode::Enecor;
    EnergyValue energy;
    double mass = 0.0;
};

/// M = m_q + m_qbar + |E1|. Propagates NegativeDiscriminant from omega1.
SpectrumResult mass(const StateLabel& label, const ModelParams& params);

struct ComparisonRow {
    std::string source;
    double mass = 0.0;
    double relative_error_pct = 0.0;
};

struct LiteratureValue {
    const char* source;
    double mass;
};

/// Published ground-state masses used for comparison.
const std::vector<LiteratureValue>& literature_masses();

double relative_error_pct(double mass);

/// Rows: the model, the experimental value, then the literature values.
std::vector<ComparisonRow> comparison_report(const SpectrumResult& result);

/// Columns source,mass_gev,rel_err_pct.
void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);

/// Plain-text summary block.
void write_spectrum_report(std::ostream& out, const SpectrumResult& result, const std::vector<ComparisonRow>& rows);

std::string to_string(PrefactorMode mode);

}  // namespace sqm
