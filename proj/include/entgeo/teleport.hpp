// Single-qubit teleportation: Alice holds the input qubit (party 0) and her
// half of a two-qubit resource (party 1), Bob holds the other half (party 2).
// Alice measures parties (0,1) in the Bell basis; Bob applies the Pauli
// correction matching the classical outcome.
//
// The correction table is tied to the phi+ resource: phi+ -> I, phi- -> Z,
// psi+ -> X, psi- -> iY (corrections act on Bob's collapsed state by plain
// matrix application). Other resources are simulated with the same table,
// which exposes their degraded fidelity.

#pragma once

#include <array>
#include <optional>
#include <utility>

#include "entgeo/catalog.hpp"
#include "entgeo/state.hpp"

namespace entgeo {

inline constexpr std::array<const char*, 4> kBellLabels = {"phi+", "phi-", "psi+", "psi-"};
inline constexpr std::array<const char*, 4> kCorrectionLabels = {"I", "Z", "X", "iY"};

// The orthonormal Bell basis in fixed order (phi+, phi-, psi+, psi-).
template <typename Scalar = double>
std::array<PureState<Scalar>, 4> bell_basis() {
    return {catalog<Scalar>(NamedState::phi_plus()), catalog<Scalar>(NamedState::phi_minus()),
            catalog<Scalar>(NamedState::psi_plus()), catalog<Scalar>(NamedState::psi_minus())};
}

template <typename Scalar = double>
struct BellOutcome {
    Scalar probability;
    // normalized collapsed state of the unmeasured qubit; absent when the
    // outcome has (near) zero probability
    std::optional<PureState<Scalar>> collapsed;
};

// Projects the chosen pair of qubits onto each Bell vector b_k:
// p_k = ||(<b_k| (x) I)|psi>||^2, plus the normalized collapsed state of the
// remaining qubit.
template <typename Scalar = double>
std::array<BellOutcome<Scalar>, 4> bell_measurement(const PureState<Scalar>& psi,
                                                    std::pair<int, int> measured = {0, 1},
                                                    const Tolerances<Scalar>& tol = {}) {
    if (psi.dims != std::vector<int>{2, 2, 2})
        throw NotThreeQubit("Bell measurement needs a 3-qubit state");
    const auto [p, q] = measured;
    if (p < 0 || p > 2 || q < 0 || q > 2 || p == q)
        throw InvalidParameters("measured parties must be two distinct indices in 0..2");
    const int rest = 3 - p - q;

    const auto basis = bell_basis<Scalar>();
    std::array<BellOutcome<Scalar>, 4> out;
    for (int k = 0; k < 4; ++k) {
        ComplexVector<Scalar> bob = ComplexVector<Scalar>::Zero(2);
        std::vector<int> digits(3);
        for (Eigen::Index g = 0; g < 8; ++g) {
            digits = basis_digits(psi.dims, g);
            const Eigen::Index bell_idx = 2 * digits[p] + digits[q];
            bob(digits[rest]) += std::conj(basis[k].amps(bell_idx)) * psi.amps(g);
        }
        const Scalar prob = bob.squaredNorm();
        out[k].probability = prob;
        if (prob > tol.eig_clip)
            out[k].collapsed = PureState<Scalar>{{2}, bob / std::sqrt(prob)};
    }
    return out;
}

// Correction unitary for Bell outcome k, fixed by demanding unit fidelity
// with the phi+ resource: I, Z, X, iY.
template <typename Scalar = double>
Eigen::Matrix2<std::complex<Scalar>> correction_for_outcome(int k) {
    using C = std::complex<Scalar>;
    Eigen::Matrix2<C> u;
    switch (k) {
        case 0: u << C(1), C(0), C(0), C(1); break;    // I
        case 1: u << C(1), C(0), C(0), C(-1); break;   // Z
        case 2: u << C(0), C(1), C(1), C(0); break;    // X
        case 3: u << C(0), C(1), C(-1), C(0); break;   // iY
        default:
            throw BadOutcomeIndex("Bell outcome index must be in 0..3, got " + std::to_string(k));
    }
    return u;
}

template <typename Scalar = double>
struct TeleportationTranscript {
    int outcome;                                 // 0..3 = phi+, phi-, psi+, psi-
    Scalar probability;
    const char* correction;                      // label of the applied unitary
    std::optional<PureState<Scalar>> bob_state;  // Bob's qubit after correction
    std::optional<Scalar> fidelity;              // |<input|bob_state>|^2
};

// Runs the protocol for every Bell outcome: compose input (x) resource,
// measure parties (0,1), correct Bob's collapsed qubit.
template <typename Scalar = double>
std::array<TeleportationTranscript<Scalar>, 4> teleport(const PureState<Scalar>& input,
                                                        const PureState<Scalar>& resource,
                                                        const Tolerances<Scalar>& tol = {}) {
    if (input.dims != std::vector<int>{2})
        throw DimensionMismatch("teleportation input must be a single qubit");
    if (resource.dims != std::vector<int>{2, 2})
        throw DimensionMismatch("teleportation resource must be a two-qubit state");

    const PureState<Scalar> joint = tensor_product(input, resource);
    const auto outcomes = bell_measurement(joint, {0, 1}, tol);

    std::array<TeleportationTranscript<Scalar>, 4> ts;
    for (int k = 0; k < 4; ++k) {
        ts[k].outcome = k;
        ts[k].probability = outcomes[k].probability;
        ts[k].correction = kCorrectionLabels[k];
        if (outcomes[k].collapsed) {
            const auto u = correction_for_outcome<Scalar>(k);
            ComplexVector<Scalar> corrected = u * outcomes[k].collapsed->amps;
            ts[k].bob_state = PureState<Scalar>{{2}, std::move(corrected)};
            ts[k].fidelity = fidelity(input, *ts[k].bob_state);
        }
    }
    return ts;
}

template <typename Scalar>
Scalar average_fidelity(const std::array<TeleportationTranscript<Scalar>, 4>& ts) {
    Scalar avg(0);
    for (const auto& t : ts)
        if (t.fidelity) avg += t.probability * *t.fidelity;
    return avg;
}

// After the measurement, Alice's pair must sit exactly in the observed Bell
// state and factor out from Bob: for every outcome with p > 0 the projected
// three-qubit state (computed through the dense projector b_k b_k^dagger (x) I)
// has to match |b_k> (x) |bob_k> entrywise within equality_tol.
template <typename Scalar = double>
bool decoupling_check(const PureState<Scalar>& input, const PureState<Scalar>& resource,
                      const Tolerances<Scalar>& tol = {}) {
    if (input.dims != std::vector<int>{2})
        throw DimensionMismatch("teleportation input must be a single qubit");
    if (resource.dims != std::vector<int>{2, 2})
        throw DimensionMismatch("teleportation resource must be a two-qubit state");

    const PureState<Scalar> joint = tensor_product(input, resource);
    const auto outcomes = bell_measurement(joint, {0, 1}, tol);
    const auto basis = bell_basis<Scalar>();

    for (int k = 0; k < 4; ++k) {
        if (!outcomes[k].collapsed) continue;

        ComplexMatrix<Scalar> proj = ComplexMatrix<Scalar>::Zero(8, 8);
        const auto& b = basis[k].amps;
        for (Eigen::Index r = 0; r < 4; ++r)
            for (Eigen::Index c = 0; c < 4; ++c) {
                const std::complex<Scalar> outer = b(r) * std::conj(b(c));
                proj(2 * r, 2 * c) = outer;
                proj(2 * r + 1, 2 * c + 1) = outer;
            }

        ComplexVector<Scalar> post = proj * joint.amps;
        post /= post.norm();
        const PureState<Scalar> factored = tensor_product(basis[k], *outcomes[k].collapsed);
        if ((post - factored.amps).cwiseAbs().maxCoeff() > tol.equality_tol) return false;
    }
    return true;
}

template <typename Scalar = double>
bool decoupling_check(const PureState<Scalar>& input, const Tolerances<Scalar>& tol = {}) {
    return decoupling_check(input, catalog<Scalar>(NamedState::phi_plus()), tol);
}

}  // namespace entgeo
