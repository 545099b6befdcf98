// Shared helpers for the unit and acceptance suites, including the
// independent oracles the implementation is checked against:
//  - partial_trace_direct: reduction by explicit projector index summation,
//    no matricization involved;
//  - two_qubit_concurrence_direct: 2|ad - bc| for a two-qubit state.

#pragma once

#include <complex>
#include <vector>

#include "entgeo/entgeo.hpp"

namespace test_support {

using Cx = std::complex<double>;

inline entgeo::PureState<double> state_of(std::vector<int> dims, std::vector<Cx> amps,
                                          bool normalize = false) {
    entgeo::ComplexVector<double> v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
    return entgeo::make_state<double>(std::move(dims), std::move(v), normalize);
}

inline double max_abs_diff(const entgeo::ComplexVector<double>& a,
                           const entgeo::ComplexVector<double>& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

// Largest amplitude difference after aligning the global phase of b to a.
inline double phase_aligned_diff(const entgeo::ComplexVector<double>& a,
                                 const entgeo::ComplexVector<double>& b) {
    Cx overlap = b.dot(a);
    const double mag = std::abs(overlap);
    const Cx phase = mag > 0 ? overlap / mag : Cx(1);
    return ((b * phase) - a).cwiseAbs().maxCoeff();
}

// Reduction to `keep` by summing |psi><psi| entries whose traced-out digits
// coincide. Quadratic in the state dimension; for oracle use only.
inline Eigen::MatrixXcd partial_trace_direct(const entgeo::PureState<double>& psi,
                                             std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    std::vector<int> comp;
    for (int k = 0; k < psi.num_parties(); ++k)
        if (std::find(keep.begin(), keep.end(), k) == keep.end()) comp.push_back(k);

    Eigen::Index d_keep = 1;
    for (int k : keep) d_keep *= psi.dims[k];

    const auto sub_index = [&](const std::vector<int>& digits, const std::vector<int>& parties) {
        Eigen::Index idx = 0;
        for (int k : parties) idx = idx * psi.dims[k] + digits[k];
        return idx;
    };

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d_keep, d_keep);
    for (Eigen::Index g1 = 0; g1 < psi.dim(); ++g1) {
        const auto digits1 = entgeo::basis_digits(psi.dims, g1);
        for (Eigen::Index g2 = 0; g2 < psi.dim(); ++g2) {
            const auto digits2 = entgeo::basis_digits(psi.dims, g2);
            if (sub_index(digits1, comp) != sub_index(digits2, comp)) continue;
            rho(sub_index(digits1, keep), sub_index(digits2, keep)) +=
                psi.amps(g1) * std::conj(psi.amps(g2));
        }
    }
    return rho;
}

inline double two_qubit_concurrence_direct(const entgeo::PureState<double>& psi) {
    const auto& a = psi.amps;
    return 2.0 * std::abs(a(0) * a(3) - a(1) * a(2));
}

}  // namespace test_support
