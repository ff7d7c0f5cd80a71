#ifndef FRACGRAPH_SPECTRAL_HPP
#define FRACGRAPH_SPECTRAL_HPP

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fracgraph/graph.hpp"

namespace fracgraph {

/// Eigenpairs of -Delta on a connected finite graph.
///
/// eigenvalues are ascending with lambda_0 = 0; column k of phi is the
/// mu-orthonormal eigenfunction phi_k (sum_x phi_j phi_k mu = delta_jk),
/// sign-fixed so the first nonzero entry is positive.
struct Spectrum {
    std::shared_ptr<const WeightedGraph> graph;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd phi; // n x n, column k = phi_k

    int size() const { return static_cast<int>(eigenvalues.size()); }

    /// p(t,x,y) = sum_k e^{-lambda_k t} phi_k(x) phi_k(y).
    double heat_entry(double t, int x, int y) const;

    /// sum_k expm1(-lambda_k t) phi_k(x) phi_k(y).  For x != y this equals
    /// p(t,x,y) by completeness, with the cancellation at t -> 0 performed
    /// exactly instead of through a ~1e-16 residue that t^{-1-s} would blow up.
    double heat_entry_centered(double t, int x, int y) const;

    /// d/dt p(t,x,y) = -sum_k lambda_k e^{-lambda_k t} phi_k(x) phi_k(y).
    double heat_entry_dt(double t, int x, int y) const;
};

/// Matrix L of -Delta: (Lu)(x) = (1/mu(x)) sum_{y~x} w_xy (u(x) - u(y)).
/// Self-adjoint in the mu-weighted inner product.
Eigen::MatrixXd mu_laplacian(const WeightedGraph& g);

/// Dense symmetric eigendecomposition of M^{1/2} L M^{-1/2}, mapped back.
Spectrum eigendecompose(const WeightedGraph& g, int max_size = 5000);

struct HeatMatrix {
    double t = 0.0;
    Eigen::MatrixXd entries; // p(t,x,y), symmetric
};

HeatMatrix heat_kernel(const Spectrum& sp, double t);

/// e^{t Delta} u (x) = sum_y p(t,x,y) u(y) mu(y), evaluated spectrally.
Eigen::VectorXd semigroup_apply(const Spectrum& sp, double t, const Eigen::VectorXd& u);

/// max over x and t of |sum_y p(t,x,y) mu(y) - 1|.
double mass_check(const Spectrum& sp, const std::vector<double>& times);

/// CSV rows "k,lambda_k,phi_k(v_0),...,phi_k(v_{n-1})".
void save_spectrum_csv(const Spectrum& sp, const std::string& path);

} // namespace fracgraph

#endif
