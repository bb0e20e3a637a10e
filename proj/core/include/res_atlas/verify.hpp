#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "res_atlas/resonances.hpp"

namespace res_atlas {

struct CheckResult {
    std::string name;
    std::string space;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

struct VerifyOptions {
    std::vector<SpaceDescriptor> spaces;  // empty: every applicable catalog space
    std::uint64_t seed = 1;
    double tol_scale = 1.0;               // multiplies every default tolerance
    std::vector<SpectralSymbol> symbols;  // empty: the built-in symbols
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

// RES_ATLAS_TOL, when set to a positive number; otherwise 1.
double tol_scale_from_env();

// Individual suites, one space at a time.
void verify_plancherel(const SpaceDescriptor& s, const VerifyOptions& o, SuiteReport& rep);
void verify_symmetry(const SpaceDescriptor& s, const VerifyOptions& o, SuiteReport& rep);
void verify_deformation(const SpaceDescriptor& s, const VerifyOptions& o, SuiteReport& rep);
void verify_residues(const SpaceDescriptor& s, const VerifyOptions& o, SuiteReport& rep);
void verify_cancellation(const SpaceDescriptor& s, const VerifyOptions& o, SuiteReport& rep);
void verify_enumeration(const SpaceDescriptor& s, const VerifyOptions& o, SuiteReport& rep);

// Sample points shared with the tests.
std::vector<cplx> deformation_points(const Contour& ct, int n, int count);
double relative_error(cplx a, cplx b);

}  // namespace res_atlas
