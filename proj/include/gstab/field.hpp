#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gstab {

using cplx = std::complex<double>;

/// Uniform rectangular grid over the time-frequency plane.
/// Axis samples include both endpoints: x_k = x_min + k*hx(), k = 0..nx-1.
struct Grid2D {
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t nx = 0;
    double xi_min = 0.0;
    double xi_max = 0.0;
    std::size_t nxi = 0;

    Grid2D() = default;
    Grid2D(double x0, double x1, std::size_t n_x, double xi0, double xi1, std::size_t n_xi)
        : x_min(x0), x_max(x1), nx(n_x), xi_min(xi0), xi_max(xi1), nxi(n_xi) {
        validate();
    }

    void validate() const {
        if (!(x_max > x_min) || !(xi_max > xi_min))
            throw std::invalid_argument("Grid2D: empty axis extent");
        if (nx < 2 || nxi < 2)
            throw std::invalid_argument("Grid2D: need at least 2 points per axis");
    }

    double hx() const { return (x_max - x_min) / static_cast<double>(nx - 1); }
    double hxi() const { return (xi_max - xi_min) / static_cast<double>(nxi - 1); }
    double x(std::size_t i) const { return x_min + static_cast<double>(i) * hx(); }
    double xi(std::size_t j) const { return xi_min + static_cast<double>(j) * hxi(); }
    /// Riemann cell measure attached to every node.
    double cell() const { return hx() * hxi(); }
    std::size_t size() const { return nx * nxi; }

    bool same_as(const Grid2D& o, double tol = 1e-12) const {
        auto close = [tol](double a, double b) { return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b)); };
        return nx == o.nx && nxi == o.nxi && close(x_min, o.x_min) && close(x_max, o.x_max) &&
               close(xi_min, o.xi_min) && close(xi_max, o.xi_max);
    }
};

/// Complex values on a Grid2D, row-major: values[i*nxi + j] at (x_i, xi_j).
struct Field2D {
    Grid2D grid;
    std::vector<cplx> values;

    Field2D() = default;
    explicit Field2D(const Grid2D& g) : grid(g), values(g.size(), cplx(0.0, 0.0)) {}

    cplx& at(std::size_t i, std::size_t j) { return values[i * grid.nxi + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return values[i * grid.nxi + j]; }

    void check_shape() const {
        if (values.size() != grid.size())
            throw std::invalid_argument("Field2D: value count does not match grid");
    }
};

/// Nonnegative real values on a Grid2D (moduli, weights, chi masks).
struct RealField2D {
    Grid2D grid;
    std::vector<double> values;

    RealField2D() = default;
    explicit RealField2D(const Grid2D& g) : grid(g), values(g.size(), 0.0) {}

    double& at(std::size_t i, std::size_t j) { return values[i * grid.nxi + j]; }
    const double& at(std::size_t i, std::size_t j) const { return values[i * grid.nxi + j]; }

    void check_shape() const {
        if (values.size() != grid.size())
            throw std::invalid_argument("RealField2D: value count does not match grid");
    }

    /// Keep every `sx`-th row and `sj`-th column (both axes must divide evenly,
    /// endpoints preserved). Used to hand fine convolution output to coarser solvers.
    RealField2D downsample(std::size_t sx, std::size_t sj) const;
};

/// Pointwise modulus.
RealField2D modulus(const Field2D& f);

/// Discrete L2 norm with the grid cell measure.
double l2_norm(const Field2D& f);
double l2_norm(const RealField2D& f);

}  // namespace gstab
