#include "ssmc/dense.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace ssmc::spectral {

std::vector<double> dense_hamiltonian(int n, double s, double b_const, double c_const, Model m)
{
    if (n < 1 || n > 12) throw std::invalid_argument("dense_hamiltonian: n must be in [1,12]");
    const ModelCoeffs k = model_coeffs(m, s, b_const, c_const);
    const std::size_t dim = std::size_t(1) << n;
    std::vector<double> h(dim * dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
        double d = 1.0 + k.bs / n * std::popcount(v); // degree term n/n = 1
        if (v == 0) d -= k.cs;
        h[v * dim + v] = d;
        for (int bit = 0; bit < n; ++bit) {
            const std::size_t u = v ^ (std::size_t(1) << bit);
            h[v * dim + u] = -1.0 / n;
        }
    }
    return h;
}

DensePair dense_ground_pair(const std::vector<double>& h, int dim)
{
    if (std::size_t(dim) * dim != h.size())
        throw std::invalid_argument("dense_ground_pair: not a dim x dim matrix");
    Eigen::MatrixXd m = Eigen::Map<const Eigen::MatrixXd>(h.data(), dim, dim);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("dense_ground_pair: eigensolver failed to converge");
    DensePair out;
    out.E0 = es.eigenvalues()(0);
    out.E1 = dim > 1 ? es.eigenvalues()(1) : out.E0;
    Eigen::VectorXd v = es.eigenvectors().col(0);
    if (v.sum() < 0) v = -v; // Perron sign fix
    out.ground.assign(v.data(), v.data() + dim);
    return out;
}

DensePair dense_graph_ground(const ExplicitGraph& g, const std::vector<double>& w, double a,
                             double b)
{
    const int dim = int(g.order());
    if (int(w.size()) != dim)
        throw std::invalid_argument("dense_graph_ground: potential size mismatch");
    std::vector<double> h(std::size_t(dim) * dim, 0.0);
    for (int v = 0; v < dim; ++v) {
        h[std::size_t(v) * dim + v] = a * g.degree(v) + b * w[v];
        for (std::uint32_t u : g.neighbors(v)) h[std::size_t(v) * dim + u] = -a;
    }
    return dense_ground_pair(h, dim);
}

} // namespace ssmc::spectral
