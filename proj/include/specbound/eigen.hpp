#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "specbound/matrix.hpp"

// Dense complex eigendecomposition and SVD with residual certificates.
// Algorithm: balancing, Householder reduction to Hessenberg form, shifted QR
// for eigenvalues, inverse iteration for the eigenvectors behind the
// residual certificates.  Singular values via one-sided Jacobi.

namespace specbound::eigen {

using la::cdouble;
using la::CMatrix;

enum class Tag { unclassified, discrete_candidate, essential_like };

struct Spectrum {
    std::vector<cdouble> eigenvalues;  // sorted by (Re, Im), multiplicity included
    std::vector<double> residuals;     // ||A v - lambda v|| / ||A||_F for unit v
    std::vector<Tag> tags;             // filled by classify_discrete
};

// Budget exhausted or certificate unattainable; carries what failed.
struct solver_error : std::runtime_error {
    solver_error(const std::string& what, std::vector<cdouble> partial)
        : std::runtime_error(what), uncertified(std::move(partial)) {}
    std::vector<cdouble> uncertified;
};

// All eigenvalues of a square matrix, each with residual <= tol certified
// through an inverse-iteration eigenvector; throws solver_error when some
// eigenvalue cannot be certified.
Spectrum eig(const CMatrix& a, double tol = 1e-8);

// Singular values, descending.
std::vector<double> svd(const CMatrix& a);

// Tags each eigenvalue discrete_candidate iff dist(lambda, [0,inf)) > eps.
Spectrum classify_discrete(Spectrum spec, double eps);

}  // namespace specbound::eigen
