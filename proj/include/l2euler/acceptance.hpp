/* The acceptance suite: one entry per shipped correctness criterion, each
 * exact (no tolerances) and time-budgeted.  Shared by the standalone
 * acceptance binary and the CLI `selftest` command.
 *
 * The suite carries its own small corpus of presentations and an
 * independent truncated-window dimension oracle: the quotient by the row
 * module is restricted to a finite band of u-exponents and its dimension
 * over the coefficient field is computed by Gaussian elimination, with the
 * band grown until the value stabilizes.  That path shares nothing with the
 * Euclidean diagonalization it checks.
 */
#ifndef L2EULER_ACCEPTANCE_HPP
#define L2EULER_ACCEPTANCE_HPP

#include "l2euler/io.hpp"

#include <functional>
#include <string>
#include <vector>

namespace l2euler {

struct CriterionResult {
    int id = 0;
    std::string description;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

struct CorpusEntry {
    std::string json;
    PresentationFile file;
    std::optional<long long> expected_chi2;
};

const std::vector<CorpusEntry>& builtin_corpus();

std::vector<CriterionResult> run_acceptance(
    const std::function<void(const CriterionResult&)>& on_result = {});

// Truncated-window cokernel dimension oracle for a square matrix over the
// twisted Laurent ring; nullopt when the value fails to stabilize or the
// matrix is visibly non-injective on the window.
std::optional<long long> truncated_coker_dim(const SkewMatrix& m, int initial_pad = 2,
                                             int rounds = 3);

// f == +- t^shift * g
bool laurent_equal_up_to_unit(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace l2euler

#endif
