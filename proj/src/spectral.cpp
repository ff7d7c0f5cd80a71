#include "fracgraph/spectral.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

namespace fracgraph {

namespace {

// exp(-lambda t) with the 0 * inf = NaN corner of lambda = 0, t = inf avoided.
inline double decay(double lambda, double t) {
    return lambda <= 0.0 ? 1.0 : std::exp(-lambda * t);
}

void require_connected(const WeightedGraph& g) {
    const auto rep = validate_graph(g);
    if (!rep.connected)
        throw Disconnected("operation requires a connected graph");
}

} // namespace

double Spectrum::heat_entry(double t, int x, int y) const {
    double sum = 0.0;
    for (int k = 0; k < size(); ++k)
        sum += decay(eigenvalues[k], t) * phi(x, k) * phi(y, k);
    return sum;
}

double Spectrum::heat_entry_centered(double t, int x, int y) const {
    double sum = 0.0;
    for (int k = 0; k < size(); ++k)
        sum += std::expm1(-eigenvalues[k] * t) * phi(x, k) * phi(y, k);
    return sum;
}

double Spectrum::heat_entry_dt(double t, int x, int y) const {
    double sum = 0.0;
    for (int k = 0; k < size(); ++k)
        sum -= eigenvalues[k] * decay(eigenvalues[k], t) * phi(x, k) * phi(y, k);
    return sum;
}

Eigen::MatrixXd mu_laplacian(const WeightedGraph& g) {
    require_connected(g);
    const int n = g.size();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (int x = 0; x < n; ++x) {
        double deg = 0.0;
        for (const auto& [y, w] : g.neighbors(x)) {
            L(x, y) = -w / g.measure(x);
            deg += w;
        }
        L(x, x) = deg / g.measure(x);
    }
    return L;
}

Spectrum eigendecompose(const WeightedGraph& g, int max_size) {
    require_connected(g);
    const int n = g.size();
    if (n > max_size)
        throw TooLarge("graph has " + std::to_string(n) + " vertices, cap is " +
                       std::to_string(max_size));

    // Symmetrized form M^{1/2} L M^{-1/2} = M^{-1/2} K M^{-1/2} with the
    // stiffness matrix K(x,x) = sum w_xy, K(x,y) = -w_xy.
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int x = 0; x < n; ++x) {
        double deg = 0.0;
        for (const auto& [y, w] : g.neighbors(x)) {
            A(x, y) = -w / std::sqrt(g.measure(x) * g.measure(y));
            deg += w;
        }
        A(x, x) = deg / g.measure(x);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
    if (solver.info() != Eigen::Success)
        throw EigenFailure("symmetric eigendecomposition did not converge");

    Spectrum sp;
    sp.graph = std::make_shared<const WeightedGraph>(g);
    sp.eigenvalues = solver.eigenvalues();
    sp.phi = solver.eigenvectors();

    const double scale = std::max(1.0, sp.eigenvalues.cwiseAbs().maxCoeff());
    for (int k = 0; k < n; ++k) {
        if (sp.eigenvalues[k] < 0.0) {
            if (sp.eigenvalues[k] < -1e-10 * scale)
                throw EigenFailure("negative eigenvalue " + std::to_string(sp.eigenvalues[k]));
            sp.eigenvalues[k] = 0.0;
        }
    }

    // Map back to mu-orthonormal eigenfunctions and fix signs.
    for (int x = 0; x < n; ++x)
        sp.phi.row(x) /= std::sqrt(g.measure(x));
    for (int k = 0; k < n; ++k) {
        const double big = sp.phi.col(k).cwiseAbs().maxCoeff();
        for (int x = 0; x < n; ++x) {
            if (std::abs(sp.phi(x, k)) > 1e-12 * big) {
                if (sp.phi(x, k) < 0.0)
                    sp.phi.col(k) = -sp.phi.col(k);
                break;
            }
        }
    }
    return sp;
}

HeatMatrix heat_kernel(const Spectrum& sp, double t) {
    if (t < 0.0)
        throw NegativeTime("heat kernel needs t >= 0, got " + std::to_string(t));
    const int n = sp.size();
    HeatMatrix H;
    H.t = t;
    H.entries.resize(n, n);
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            double p = sp.heat_entry(t, x, y);
            if (p < 0.0) {
                if (p < -1e-12)
                    std::cerr << "fracgraph: heat kernel entry p(" << t << "," << x << "," << y
                              << ") = " << p << " below -1e-12\n";
                else
                    p = 0.0;
            }
            H.entries(x, y) = p;
            H.entries(y, x) = p;
        }
    }
    return H;
}

Eigen::VectorXd semigroup_apply(const Spectrum& sp, double t, const Eigen::VectorXd& u) {
    if (t < 0.0)
        throw NegativeTime("semigroup needs t >= 0, got " + std::to_string(t));
    if (u.size() != sp.size())
        throw DimensionMismatch("function has " + std::to_string(u.size()) +
                                " entries, graph has " + std::to_string(sp.size()));
    // coefficients <u, phi_k>_mu, decayed and resummed
    const auto& mu = sp.graph->measures();
    Eigen::VectorXd c(sp.size());
    for (int k = 0; k < sp.size(); ++k) {
        double dot = 0.0;
        for (int x = 0; x < sp.size(); ++x)
            dot += u[x] * sp.phi(x, k) * mu[static_cast<size_t>(x)];
        c[k] = dot * decay(sp.eigenvalues[k], t);
    }
    return sp.phi * c;
}

double mass_check(const Spectrum& sp, const std::vector<double>& times) {
    const auto& mu = sp.graph->measures();
    double worst = 0.0;
    for (double t : times) {
        const HeatMatrix H = heat_kernel(sp, t);
        for (int x = 0; x < sp.size(); ++x) {
            double mass = 0.0;
            for (int y = 0; y < sp.size(); ++y)
                mass += H.entries(x, y) * mu[static_cast<size_t>(y)];
            worst = std::max(worst, std::abs(mass - 1.0));
        }
    }
    return worst;
}

void save_spectrum_csv(const Spectrum& sp, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out.precision(17);
    for (int k = 0; k < sp.size(); ++k) {
        out << k << "," << sp.eigenvalues[k];
        for (int x = 0; x < sp.size(); ++x)
            out << "," << sp.phi(x, k);
        out << "\n";
    }
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

} // namespace fracgraph
