// Randomized verification suites shared by the command-line front end and
// the acceptance checks.  Every suite is deterministic in (vars, seed) and
// serializes its first failing instance as a JSON counterexample that can be
// re-parsed and replayed.

#pragma once

#include "alexr/io.hpp"
#include "alexr/rng.hpp"
#include "alexr/torsion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alexr {

struct SuiteResult {
    std::string name;
    int instances = 0;
    int failures = 0;
    std::vector<std::string> notes;
    std::optional<Json> counterexample;

    bool pass() const { return failures == 0; }
};

std::vector<std::string> suite_names();

// Runs one of the named suites with its default instance count (or the
// override if positive).
SuiteResult run_suite(const std::string& name, const SessionConfig& cfg, int instances = 0);

// Re-parses a serialized counterexample and reruns that single instance;
// returns true if the failure reproduces.
bool replay_counterexample(const Json& counterexample);

// Individual suites (used directly by the acceptance checks).
SuiteResult suite_functoriality(const SessionConfig& cfg, int instances);
SuiteResult suite_monoidality(const SessionConfig& cfg, int instances);
SuiteResult suite_torsion_mult(const SessionConfig& cfg, int instances);
SuiteResult suite_duality_92(const SessionConfig& cfg, int instances);
SuiteResult suite_duality_95(const SessionConfig& cfg, int instances);
SuiteResult suite_symmetry(const SessionConfig& cfg, int instances);
SuiteResult suite_integrality(const SessionConfig& cfg, int instances);
SuiteResult suite_vanishing(const SessionConfig& cfg, int instances);
// Magnus layer (relative torsion + representation) checks over random twist
// composites; part of the acceptance gate rather than the named CLI suites.
SuiteResult suite_magnus(const SessionConfig& cfg, int instances);
// Cylinder evaluation at G = {1} against the integer homological action.
SuiteResult suite_trivial_group(int instances);

// Random generators, exposed for tests.
CobObject random_object(Rng& rng, int genus, int nvars);
FreeHom random_twist_composite(Rng& rng, int k, int max_factors);
HeegaardWord random_heegaard_word(Rng& rng, int nvars, int max_genus, int pieces,
                                  const CobObject& start);
HeegaardWord random_heegaard_word(Rng& rng, int nvars, int max_genus, int pieces);

struct RandomComplex {
    BasedChainComplex complex;
    HomologyBasis homology;
};
RandomComplex random_based_complex(Rng& rng, int nvars, int length, int max_dim);

// Greedy homological basis from kernel/boundary computations.
HomologyBasis make_homology_basis(const BasedChainComplex& c);

std::string render_report(const SuiteResult& r, const SessionConfig& cfg);
Json report_json(const SuiteResult& r, const SessionConfig& cfg);

}  // namespace alexr
