#pragma once

#include <stdexcept>
#include <string>

namespace res_atlas {

// Positive restricted roots with their multiplicity class.
enum class Root { Beta1, Beta2, MidMinus, MidPlus };

const char* root_name(Root r);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CatalogError : Error {
    using Error::Error;
};

struct ExcludedSpaceError : Error {
    using Error::Error;
};

// A pole of a gamma quotient, cotangent or rank-one factor. `k` is the lattice
// offset: lambda_beta = rho_tilde_beta + k for cotangent poles, the
// nonpositive integer -k for gamma poles, and the index l of L_l for q1.
struct PoleError : Error {
    enum class Kind { Gamma, Cotangent, RankOne, Density };
    PoleError(Kind kind, Root root, long k, const std::string& what)
        : Error(what), kind(kind), root(root), k(k) {}
    Kind kind;
    Root root;
    long k;
};

// Contour-level failures carry the offending L_l index when there is one.
struct ContourError : Error {
    ContourError(const std::string& what, long ell = -1) : Error(what), ell(ell) {}
    long ell;
};

struct ConvergenceError : Error {
    using Error::Error;
};

struct BranchError : Error {
    using Error::Error;
};

}  // namespace res_atlas
