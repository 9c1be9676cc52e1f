#ifndef STPADE_SPECTRAL_HPP
#define STPADE_SPECTRAL_HPP

#include <complex>
#include <string>
#include <vector>

#include "stpade/moment_sequence.hpp"
#include "stpade/pade.hpp"

namespace stpade {

enum class PoleVariable { xi, s };

/// Structural validation outcome attached to a pole/residue form: for the
/// xi variable the poles must be real, simple and < -1 with positive
/// residues; for the s variable the poles lie in [0,1) and the residues in
/// [0,1) with total in (0,1).
struct StructureCertificate {
    bool passed = true;
    std::vector<std::string> violations;
};

struct PoleResiduePair {
    double pole = 0.0;
    double residue = 0.0;
};

struct PoleResidueForm {
    std::vector<PoleResiduePair> pairs;
    PoleVariable variable = PoleVariable::xi;
    StructureCertificate certificate;

    /// sum_i residue_i / (arg - pole_i)
    std::complex<double> eval(std::complex<double> arg) const;
    double residue_sum() const;
};

/// Range/sign validation for a pole/residue pair list, per the variable's
/// invariants described on StructureCertificate.
StructureCertificate validate_pole_residue(const std::vector<PoleResiduePair>& pairs,
                                           PoleVariable variable);

/// Partial-fraction decomposition of a proper approximant.  Accepts a
/// standard-form approximant with L = M-1 (poles reported in the xi
/// variable) or a nonstandard s-form (poles reported in s).  Repeated roots
/// raise MultiplePoleError; roots with a genuinely complex part raise
/// StructureViolationError; range and sign defects are recorded in the
/// certificate instead of thrown.
PoleResidueForm to_pole_residue(const PadeApproximant& approx);

struct NonstandardForm {
    PoleResidueForm form_s;        // poles s_n, residues A_n
    PadeApproximant approximant;   // s_nonstandard polynomial form, b1 = 1
    double prenormalization_linear_coefficient = 0.0;
};

/// Map a xi-variable form (poles p_n < -1, residues l_n > 0) to the s
/// representation: s_n = -1/p_n, A_n = -l_n/p_n, plus the expanded
/// polynomial form with the denominator normalized so its linear
/// coefficient is exactly 1.
NonstandardForm to_nonstandard(const PoleResidueForm& xi_form);

/// c_m = sum_n A_n s_n^m for m = 0 ... count-1.
MomentSequence moments_from_poles(const PoleResidueForm& s_form, int count);

/// First N moments agree (relative tolerance 1e-12 with absolute floor 1).
bool sn_equivalent(const MomentSequence& a, const MomentSequence& b, int N);

/// Every shifted-series approximant with L + M <= N, L >= M >= 0 has
/// coefficient-wise equal numerator and denominator (tolerance 1e-9).
bool pade_table_equal(const MomentSequence& a, const MomentSequence& b, int N);

/// Sorted real denominator roots, reported as poles in the xi variable.
std::vector<double> denominator_poles_xi(const PadeApproximant& approx);

struct InterlacingReport {
    bool strict = true;                   // no violations at any order
    std::vector<std::string> warnings;    // violations within 1e-9 slack
    std::vector<std::string> violations;  // violations beyond the slack
};

/// Empirical check that the pole sets of [M-1+J/M] for consecutive M
/// interlace strictly, for M = 1 ... M_max.  Near-ties within 1e-9 are
/// downgraded to warnings.
InterlacingReport check_pole_interlacing(const MomentSequence& moments, int J, int M_max);

} // namespace stpade

#endif
