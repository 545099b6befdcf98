// Wedge-product geometry of bipartite entanglement.
//
// Matricizing a pure state across a bipartition A|B gives a d_A x d_B matrix
// M whose columns chi_j are the un-normalized post-measurement vectors of
// side A (project side B onto basis state |j>). The state is separable across
// A|B iff all chi_j are parallel (M has rank 1); the degree of
// non-parallelism is quantified by parallelogram areas:
//
//     C^2 = 4 * sum_{j<k} |chi_j ^ chi_k|^2
//
// with |u ^ v|^2 = sum_{i<j} |u_i v_j - u_j v_i|^2 the squared wedge norm.
// For a two-qubit state this reduces to C = 2 |det M|. An algebraically
// independent route, C = sqrt(2 (1 - Tr rho_A^2)), serves as cross-check.

#pragma once

#include <array>
#include <utility>

#include "entgeo/state.hpp"

namespace entgeo {

// M(i, j) = amplitude of |i>_A (x) |j>_B. Rows are indexed by the focus side
// in ascending party order, columns by the complement, both big-endian
// mixed-radix. Singular values and |det| are unaffected by the orientation
// choice.
template <typename Scalar = double>
ComplexMatrix<Scalar> state_matrix(const PureState<Scalar>& psi, const Bipartition& split) {
    const std::vector<int>& focus = split.focus();
    const std::vector<int> comp = split.complement(psi.num_parties());

    Eigen::Index d_a = 1, d_b = 1;
    for (int k : focus) d_a *= psi.dims[k];
    for (int k : comp) d_b *= psi.dims[k];

    // per-party strides into the row (focus) and column (complement) indices
    std::vector<Eigen::Index> row_stride(psi.dims.size(), 0), col_stride(psi.dims.size(), 0);
    Eigen::Index s = 1;
    for (std::size_t i = focus.size(); i-- > 0;) {
        row_stride[focus[i]] = s;
        s *= psi.dims[focus[i]];
    }
    s = 1;
    for (std::size_t i = comp.size(); i-- > 0;) {
        col_stride[comp[i]] = s;
        s *= psi.dims[comp[i]];
    }

    ComplexMatrix<Scalar> m(d_a, d_b);
    std::vector<int> digits(psi.dims.size(), 0);
    for (Eigen::Index g = 0; g < psi.dim(); ++g) {
        Eigen::Index row = 0, col = 0;
        for (std::size_t k = 0; k < psi.dims.size(); ++k) {
            row += digits[k] * row_stride[k];
            col += digits[k] * col_stride[k];
        }
        m(row, col) = psi.amps(g);
        // increment mixed-radix digits, least significant party last
        for (std::size_t k = psi.dims.size(); k-- > 0;) {
            if (++digits[k] < psi.dims[k]) break;
            digits[k] = 0;
        }
    }
    return m;
}

// The chi_j family for a bipartition: column j is (I_A (x) <j|_B) |psi>.
template <typename Scalar = double>
struct PostMeasurementFamily {
    Bipartition bipartition;
    ComplexMatrix<Scalar> vectors;  // d_A x d_B, column j = chi_j

    Eigen::Index count() const { return vectors.cols(); }
    auto chi(Eigen::Index j) const { return vectors.col(j); }
};

template <typename Scalar = double>
PostMeasurementFamily<Scalar> post_measurement_vectors(const PureState<Scalar>& psi,
                                                       const Bipartition& split) {
    return {split, state_matrix(psi, split)};
}

// Squared parallelogram area spanned by two complex vectors:
// sum_{i<j} |u_i v_j - u_j v_i|^2. Accepts any Eigen vector expressions.
template <typename DerivedU, typename DerivedV>
typename DerivedU::RealScalar wedge_norm_sq(const Eigen::MatrixBase<DerivedU>& u,
                                            const Eigen::MatrixBase<DerivedV>& v) {
    if (u.size() != v.size())
        throw DimensionMismatch("wedge product needs vectors of equal length");
    using Real = typename DerivedU::RealScalar;
    Real sum(0);
    for (Eigen::Index i = 0; i < u.size(); ++i)
        for (Eigen::Index j = i + 1; j < u.size(); ++j)
            sum += std::norm(u(i) * v(j) - u(j) * v(i));
    return sum;
}

// C = 2 sqrt( sum_{j<k} |chi_j ^ chi_k|^2 ) over all pairs of
// post-measurement vectors.
template <typename Scalar = double>
Scalar concurrence_wedge(const PureState<Scalar>& psi, const Bipartition& split) {
    const ComplexMatrix<Scalar> m = state_matrix(psi, split);
    Scalar sum(0);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index k = j + 1; k < m.cols(); ++k)
            sum += wedge_norm_sq(m.col(j), m.col(k));
    return Scalar(2) * std::sqrt(sum);
}

// Purity route: C = sqrt(2 (1 - Tr rho_A^2)) with rho_A = M M^dagger the
// reduced state on the focus. Serves as the independent oracle for the wedge
// construction; agreement is a tested invariant.
template <typename Scalar = double>
Scalar concurrence_purity(const PureState<Scalar>& psi, const Bipartition& split) {
    const ComplexMatrix<Scalar> m = state_matrix(psi, split);
    const ComplexMatrix<Scalar> rho = m * m.adjoint();
    const Scalar purity = rho.squaredNorm();  // Tr(rho^2) for Hermitian rho
    return std::sqrt(Scalar(2) * std::max(Scalar(0), Scalar(1) - purity));
}

template <typename Scalar = double>
struct ConcurrenceReport {
    Bipartition bipartition;
    Scalar c_wedge;
    Scalar c_oracle;
    Scalar discrepancy;  // |c_wedge - c_oracle|
};

template <typename Scalar = double>
ConcurrenceReport<Scalar> concurrence_report(const PureState<Scalar>& psi,
                                             const Bipartition& split) {
    const Scalar w = concurrence_wedge(psi, split);
    const Scalar o = concurrence_purity(psi, split);
    return {split, w, o, std::abs(w - o)};
}

template <typename Scalar = double>
struct SeparabilityReport {
    bool separable;
    int effective_rank;  // singular values above rank_tol relative to the largest
};

// Separable across A|B iff the bipartition matrix has rank 1, i.e. the
// second-largest singular value vanishes.
template <typename Scalar = double>
SeparabilityReport<Scalar> is_separable(const PureState<Scalar>& psi, const Bipartition& split,
                                        const Tolerances<Scalar>& tol = {}) {
    const ComplexMatrix<Scalar> m = state_matrix(psi, split);
    Eigen::JacobiSVD<ComplexMatrix<Scalar>> svd(m);
    const RealVector<Scalar>& sv = svd.singularValues();
    const Scalar cutoff = tol.rank_tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    const bool sep = sv.size() < 2 || sv(1) <= cutoff;
    return {sep, rank};
}

// Schmidt coefficients: singular values of the bipartition matrix, descending.
// Their squares are the eigenvalues of rho_A and sum to one.
template <typename Scalar = double>
RealVector<Scalar> schmidt_coefficients(const PureState<Scalar>& psi, const Bipartition& split) {
    Eigen::JacobiSVD<ComplexMatrix<Scalar>> svd(state_matrix(psi, split));
    return svd.singularValues();
}

// ---------------------------------------------------------------------------
// Three-party relations

// Single-party concurrences of a three-party state and the slack of the
// entanglement polygon inequalities: no concurrence may exceed the sum of the
// other two, linearly or in squares. Raw slacks, no clamping.
template <typename Scalar = double>
struct PolygonReport {
    std::array<Scalar, 3> c;              // C_{A|BC}, C_{B|CA}, C_{C|AB}
    std::array<Scalar, 3> linear_slack;   // C_j + C_k - C_i
    std::array<Scalar, 3> squared_slack;  // C_j^2 + C_k^2 - C_i^2
};

template <typename Scalar = double>
PolygonReport<Scalar> polygon_check(const PureState<Scalar>& psi) {
    if (psi.num_parties() != 3)
        throw NotThreeParty("polygon inequalities need exactly 3 parties, got " +
                            std::to_string(psi.num_parties()));
    PolygonReport<Scalar> rep;
    for (int i = 0; i < 3; ++i) rep.c[i] = concurrence_wedge(psi, Bipartition{i});
    for (int i = 0; i < 3; ++i) {
        const Scalar cj = rep.c[(i + 1) % 3];
        const Scalar ck = rep.c[(i + 2) % 3];
        rep.linear_slack[i] = cj + ck - rep.c[i];
        rep.squared_slack[i] = cj * cj + ck * ck - rep.c[i] * rep.c[i];
    }
    return rep;
}

// For a three-qubit state with amplitudes (a,b,c,d,p,q,r,s) the squared-
// concurrence slack of the first party has the closed form
//
//     C^2_{B|CA} + C^2_{C|AB} - C^2_{A|BC}
//         = 4 [ 2(ad-bc)^2 + 2(ps-qr)^2 + (as+pd-br-qc)^2 ]
//
// for real amplitudes. Both sides are returned without asserting equality;
// the right side uses squared moduli so it stays well-defined (and
// nonnegative) for complex input, where the identity no longer binds.
template <typename Scalar = double>
struct IdentityResidual {
    Scalar lhs;  // wedge-route slack of the squared polygon inequality
    Scalar rhs;  // closed-form combination of 2x2 minors
};

template <typename Scalar = double>
IdentityResidual<Scalar> three_qubit_identity_residual(const PureState<Scalar>& psi) {
    if (psi.dims != std::vector<int>{2, 2, 2})
        throw NotThreeQubit("residual identity is defined for 3-qubit states");

    const auto sq = [](const PureState<Scalar>& s, int party) {
        const Scalar c = concurrence_wedge(s, Bipartition{party});
        return c * c;
    };
    const Scalar lhs = sq(psi, 1) + sq(psi, 2) - sq(psi, 0);

    const auto& v = psi.amps;
    const std::complex<Scalar> a = v(0), b = v(1), c = v(2), d = v(3);
    const std::complex<Scalar> p = v(4), q = v(5), r = v(6), s = v(7);
    const Scalar rhs = Scalar(4) * (Scalar(2) * std::norm(a * d - b * c) +
                                    Scalar(2) * std::norm(p * s - q * r) +
                                    std::norm(a * s + p * d - b * r - q * c));
    return {lhs, rhs};
}

}  // namespace entgeo
