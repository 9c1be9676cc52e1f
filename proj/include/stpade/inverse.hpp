#ifndef STPADE_INVERSE_HPP
#define STPADE_INVERSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stpade/dataset.hpp"
#include "stpade/moment_sequence.hpp"
#include "stpade/spectral.hpp"

namespace stpade {

struct ReconstructionConfig {
    int M = 1;                   // number of poles sought (p = M-1, q = M)
    int max_iterations = 500;    // per start
    double tolerance = 1e-10;    // relative-residual convergence threshold
    int multistart_count = 8;
    std::uint64_t seed = 0;
};

enum class ReconstructionStatus {
    converged,    // relative residual at or below tolerance
    best_effort,  // no start reached tolerance; best run returned
    no_contrast,  // data indistinguishable from the zero function
};

/// Feasibility report for the returned pole/residue parameters: poles and
/// residues inside [0, 1-1e-9] and residue sum inside (0, 1-1e-9], checked
/// after the final projection.
struct ConstraintReport {
    bool feasible = true;
    double residue_sum = 0.0;
    double min_pole_gap = 0.0;  // smallest |s_i - s_j|; 0 when fewer than 2 poles
    std::vector<std::string> notes;
};

struct ReconstructionResult {
    PoleResidueForm form;             // s-variable poles and residues
    MomentSequence moments;           // geometric expansion of the form, 2M+1 terms
    double residual = 0.0;            // rms of |model - d_k|
    double relative_residual = 0.0;   // ||model - d|| / ||d||
    ReconstructionStatus status = ReconstructionStatus::best_effort;
    ConstraintReport certificate;
    int iterations = 0;               // taken by the winning start
    std::vector<double> per_point_residuals;
};

/// Fit sum_n A_n/(s - s_n) to the data in the least-squares sense over the
/// box s_n, A_n in [0, 1-1e-9] with sum A_n < 1, by a damped Gauss-Newton
/// iteration with projection, run from multistart_count seeded starts.
/// Requires 2M <= record count (numerator and denominator coefficient count
/// p+q+1 <= N).
ReconstructionResult reconstruct(const FrequencyDataset& data,
                                 const ReconstructionConfig& config);

struct ModelSelection {
    std::vector<ReconstructionResult> results;  // index i holds M = i+1
    int selected_M = 0;  // smallest order beyond which improvement is noise-level
    std::vector<std::string> warnings;
};

/// Run reconstruct for M = 1 ... M_max (truncated with a warning when the
/// dataset cannot support an order) and flag the elbow: the smallest M whose
/// relative residual no later order improves by more than
/// 10 * noise_level + 1e-8.
ModelSelection model_select(const FrequencyDataset& data, int M_max,
                            const ReconstructionConfig& base = ReconstructionConfig{});

} // namespace stpade

#endif
