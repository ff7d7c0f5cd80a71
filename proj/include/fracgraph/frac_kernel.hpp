#ifndef FRACGRAPH_FRAC_KERNEL_HPP
#define FRACGRAPH_FRAC_KERNEL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fracgraph/spectral.hpp"

namespace fracgraph {

/// Gamma function for positive arguments, relative error <= 1e-13.
double gamma_fn(double x);

enum class KernelMethod { spectral, quadrature };

const char* to_string(KernelMethod m);

/// Discrete fractional kernel W_s(x,y), symmetric and positive off the
/// diagonal, zero on it.  (-Delta)^s u(x) = (1/mu(x)) sum_y W_s(x,y)(u(x)-u(y)).
struct FracKernel {
    double s = 0.5;
    KernelMethod method = KernelMethod::spectral;
    std::shared_ptr<const WeightedGraph> graph;
    Eigen::MatrixXd entries;  // W_s, zero diagonal
    Eigen::VectorXd row_sums; // sum_{y != x} W_s(x,y)

    int size() const { return static_cast<int>(row_sums.size()); }
};

struct QuadratureConfig {
    double split_point = 1.0; // integral split between the t^{-s}-singular head and the tail
    int nodes_inner = 64;     // initial node budget, t in (0, split]
    int nodes_outer = 64;     // initial node budget after the tau = t^{-s} substitution
    double target_rel_tol = 1e-9;
};

/// W_s(x,y) = -mu(x) mu(y) sum_k lambda_k^s phi_k(x) phi_k(y) for x != y.
FracKernel ws_spectral(const Spectrum& sp, double s);

/// W_s(x,y) = (s/Gamma(1-s)) mu(x) mu(y) int_0^inf p(t,x,y) t^{-1-s} dt,
/// integrated numerically per pair.  Verification oracle for ws_spectral.
FracKernel ws_quadrature(const Spectrum& sp, double s, const QuadratureConfig& cfg = {});

Eigen::VectorXd frac_laplacian_apply(const FracKernel& k, const Eigen::VectorXd& u);

/// Row-sum bound C_{x,s} = mu(x)/((1-s) Gamma(1-s)) *
///   max{ mu(x) max_{t in [0,1]} |d/dt p(t,x,x)|, 1 }.
/// The maximum is taken on a dense grid refined toward t = 0.
double cxs_bound(const WeightedGraph& g, const Spectrum& sp, double s, const std::string& x);
double cxs_bound(const WeightedGraph& g, const Spectrum& sp, double s, int x);

struct KernelDiagnostics {
    double max_symmetry_defect = 0.0;
    double min_offdiagonal = 0.0;
    struct Row {
        std::string id;
        double row_sum;
        double c_xs;
        double slack; // c_xs - row_sum
    };
    std::vector<Row> rows;
    std::optional<double> max_rel_deviation; // filled when a second kernel is supplied
};

KernelDiagnostics kernel_diagnostics(const FracKernel& k, const WeightedGraph& g,
                                     const Spectrum& sp, const FracKernel* other = nullptr);

void save_kernel_csv(const FracKernel& k, const std::string& path);
void save_rowsum_csv(const FracKernel& k, const WeightedGraph& g, const Spectrum& sp,
                     const std::string& path);

} // namespace fracgraph

#endif
