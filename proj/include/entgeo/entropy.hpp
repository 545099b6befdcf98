// Reduced density matrices and von Neumann entropy S(rho) = -Tr(rho log rho).
//
// Reductions of a pure state are obtained as M M^dagger with M the
// bipartition matrix of the kept parties, which is O(d_A^2 d_B) instead of
// summing the full projector.

#pragma once

#include <cmath>
#include <vector>

#include "entgeo/geometry.hpp"
#include "entgeo/state.hpp"

namespace entgeo {

enum class EntropyBase { bits, nats };  // log base 2 resp. e

inline double log_base_factor(EntropyBase base) {
    return base == EntropyBase::bits ? M_LN2 : 1.0;
}

template <typename Scalar = double>
class DensityMatrix {
public:
    // Validates Hermiticity (1e-10 entrywise), unit trace (norm_tol) and
    // positivity (eigenvalues >= -eig_clip).
    explicit DensityMatrix(ComplexMatrix<Scalar> entries, const Tolerances<Scalar>& tol = {})
        : entries_(std::move(entries)) {
        if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
            throw NotDensityMatrix("matrix must be square and nonempty");
        if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > Scalar(1e-10))
            throw NotDensityMatrix("matrix is not Hermitian");
        if (std::abs(entries_.trace().real() - Scalar(1)) > tol.norm_tol ||
            std::abs(entries_.trace().imag()) > tol.norm_tol)
            throw NotDensityMatrix("trace is not 1");
        Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> es(entries_,
                                                                Eigen::EigenvaluesOnly);
        eigenvalues_ = es.eigenvalues();
        if (eigenvalues_.minCoeff() < -tol.eig_clip)
            throw NotDensityMatrix("matrix has a negative eigenvalue");
    }

    const ComplexMatrix<Scalar>& entries() const { return entries_; }
    const RealVector<Scalar>& eigenvalues() const { return eigenvalues_; }
    Eigen::Index dim() const { return entries_.rows(); }

private:
    ComplexMatrix<Scalar> entries_;
    RealVector<Scalar> eigenvalues_;
};

using DensityMatrixd = DensityMatrix<double>;

// rho_keep = Tr_complement |psi><psi|, computed as M M^dagger with
// M = state_matrix(psi, keep).
template <typename Scalar = double>
DensityMatrix<Scalar> partial_trace(const PureState<Scalar>& psi, const std::vector<int>& keep,
                                    const Tolerances<Scalar>& tol = {}) {
    Bipartition split = [&] {
        try {
            return Bipartition(keep);
        } catch (const InvalidBipartition& e) {
            throw InvalidSubset(std::string(e.what()));
        }
    }();
    const ComplexMatrix<Scalar> m = [&] {
        try {
            return state_matrix(psi, split);
        } catch (const InvalidBipartition& e) {
            throw InvalidSubset(std::string(e.what()));
        }
    }();
    ComplexMatrix<Scalar> rho = m * m.adjoint();
    rho = ((rho + rho.adjoint()) / Scalar(2)).eval();  // kill rounding skew
    return DensityMatrix<Scalar>(std::move(rho), tol);
}

// |psi><psi| itself, for entropy of the undivided state.
template <typename Scalar = double>
DensityMatrix<Scalar> pure_projector(const PureState<Scalar>& psi,
                                     const Tolerances<Scalar>& tol = {}) {
    ComplexMatrix<Scalar> rho = psi.amps * psi.amps.adjoint();
    return DensityMatrix<Scalar>(std::move(rho), tol);
}

// S(rho) = -sum_i lambda_i log(lambda_i), eigenvalues below eig_clip
// contributing zero.
template <typename Scalar = double>
Scalar von_neumann_entropy(const DensityMatrix<Scalar>& rho,
                           EntropyBase base = EntropyBase::bits,
                           const Tolerances<Scalar>& tol = {}) {
    Scalar s(0);
    for (Eigen::Index i = 0; i < rho.eigenvalues().size(); ++i) {
        const Scalar lam = rho.eigenvalues()(i);
        if (lam > tol.eig_clip) s -= lam * std::log(lam);
    }
    return s / static_cast<Scalar>(log_base_factor(base));
}

// Overload validating a raw matrix first; throws NotDensityMatrix.
template <typename Scalar = double>
Scalar von_neumann_entropy(const ComplexMatrix<Scalar>& rho,
                           EntropyBase base = EntropyBase::bits,
                           const Tolerances<Scalar>& tol = {}) {
    return von_neumann_entropy(DensityMatrix<Scalar>(rho, tol), base, tol);
}

template <typename Scalar = double>
struct EntropyReport {
    EntropyBase base;
    std::vector<Scalar> single_party;  // S(rho_k) for each party k
    Scalar full_state;                 // S(|psi><psi|), zero for a pure state
};

template <typename Scalar = double>
EntropyReport<Scalar> entropy_report(const PureState<Scalar>& psi,
                                     EntropyBase base = EntropyBase::bits,
                                     const Tolerances<Scalar>& tol = {}) {
    EntropyReport<Scalar> rep{base, {}, Scalar(0)};
    rep.single_party.reserve(psi.num_parties());
    for (int k = 0; k < psi.num_parties(); ++k)
        rep.single_party.push_back(von_neumann_entropy(partial_trace(psi, {k}, tol), base, tol));
    rep.full_state = von_neumann_entropy(pure_projector(psi, tol), base, tol);
    return rep;
}

// Araki-Lieb lower bound S_AB >= |S_A - S_B| and subadditivity
// S_AB <= S_A + S_B, reported as raw slacks (>= 0 when the inequalities hold).
template <typename Scalar = double>
struct ArakiLiebReport {
    Scalar s_a;
    Scalar s_b;
    Scalar s_ab;
    Scalar lower_slack;  // S_AB - |S_A - S_B|
    Scalar upper_slack;  // S_A + S_B - S_AB
};

template <typename Scalar = double>
ArakiLiebReport<Scalar> araki_lieb_check(const PureState<Scalar>& psi,
                                         const std::vector<int>& a, const std::vector<int>& b,
                                         EntropyBase base = EntropyBase::bits,
                                         const Tolerances<Scalar>& tol = {}) {
    for (int k : a)
        for (int l : b)
            if (k == l)
                throw OverlappingSubsets("subsets share party " + std::to_string(k));
    if (a.empty() || b.empty())
        throw InvalidSubset("both subsets must be nonempty");

    std::vector<int> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());

    const Scalar s_a = von_neumann_entropy(partial_trace(psi, a, tol), base, tol);
    const Scalar s_b = von_neumann_entropy(partial_trace(psi, b, tol), base, tol);
    const Scalar s_ab =
        static_cast<int>(ab.size()) == psi.num_parties()
            ? von_neumann_entropy(pure_projector(psi, tol), base, tol)
            : von_neumann_entropy(partial_trace(psi, ab, tol), base, tol);

    return {s_a, s_b, s_ab, s_ab - std::abs(s_a - s_b), s_a + s_b - s_ab};
}

}  // namespace entgeo
