// Reproducible sampling: Haar-distributed pure states (normalized i.i.d.
// complex Gaussians) and Haar-distributed unitaries (QR of a complex Ginibre
// matrix with phase fixing).
//
// std::normal_distribution is implementation-defined, so the Gaussian stream
// is generated by hand (53-bit uniforms from mt19937_64 + Box-Muller). The
// same seed therefore yields the same state with any conforming standard
// library.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "entgeo/state.hpp"

namespace entgeo {

class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0, 1) with 53-bit resolution
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * M_PI * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    std::complex<double> complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Haar-random pure state: i.i.d. standard complex Gaussian amplitudes,
// normalized. Deterministic for a fixed seed.
template <typename Scalar = double>
PureState<Scalar> random_pure(const std::vector<int>& dims, std::uint64_t seed) {
    check_dims(dims);
    GaussianStream g(seed);
    ComplexVector<Scalar> amps(total_dim(dims));
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const auto z = g.complex_normal();
        amps(i) = std::complex<Scalar>(static_cast<Scalar>(z.real()),
                                       static_cast<Scalar>(z.imag()));
    }
    return make_state<Scalar>(dims, std::move(amps), /*normalize=*/true);
}

// Haar-random unitary: QR-decompose a Ginibre matrix and absorb the phases of
// R's diagonal so the distribution is exactly Haar.
template <typename Scalar = double>
ComplexMatrix<Scalar> random_unitary(Eigen::Index dim, std::uint64_t seed) {
    if (dim < 1)
        throw InvalidParameters("unitary dimension must be >= 1");
    GaussianStream g(seed);
    ComplexMatrix<Scalar> a(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c) {
            const auto z = g.complex_normal();
            a(r, c) = std::complex<Scalar>(static_cast<Scalar>(z.real()),
                                           static_cast<Scalar>(z.imag()));
        }
    Eigen::HouseholderQR<ComplexMatrix<Scalar>> qr(a);
    ComplexMatrix<Scalar> q = qr.householderQ() * ComplexMatrix<Scalar>::Identity(dim, dim);
    const ComplexVector<Scalar> diag = qr.matrixQR().diagonal();
    for (Eigen::Index c = 0; c < dim; ++c) {
        const Scalar mag = std::abs(diag(c));
        if (mag > Scalar(0)) q.col(c) *= diag(c) / mag;
    }
    return q;
}

// Per-sample seed used by sweeps: sample i of a run seeded with s draws from
// seed s + i, so row 0 reproduces random_pure(dims, s) and every row can be
// replayed on its own.
inline std::uint64_t sample_seed(std::uint64_t run_seed, std::uint64_t index) {
    return run_seed + index;
}

}  // namespace entgeo
