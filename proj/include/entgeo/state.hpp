// Multipartite pure states as dense complex amplitude vectors.
//
// A state over parties with local dimensions (d_0, ..., d_{n-1}) stores its
// prod(d_k) amplitudes in big-endian mixed-radix order: party 0 is the most
// significant digit, so |i_0 i_1 ... i_{n-1}> sits at index
// ((i_0 * d_1 + i_1) * d_2 + i_2) * ... .  All types are templated on the
// real scalar, with double as the working default.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "entgeo/errors.hpp"

namespace entgeo {

template <typename Scalar>
using ComplexVector = Eigen::Vector<std::complex<Scalar>, Eigen::Dynamic>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RealVector = Eigen::Vector<Scalar, Eigen::Dynamic>;

// Numeric thresholds used across the library. Defaults assume double.
template <typename Scalar = double>
struct Tolerances {
    Scalar norm_tol = Scalar(1e-9);      // |sum |amp|^2 - 1| acceptance
    Scalar rank_tol = Scalar(1e-9);      // relative singular-value cutoff
    Scalar equality_tol = Scalar(1e-9);  // state / report comparisons
    Scalar eig_clip = Scalar(1e-12);     // eigenvalue clipping for 0*log(0)
};

// ---------------------------------------------------------------------------
// Mixed-radix indexing

inline void check_dims(const std::vector<int>& dims) {
    if (dims.empty())
        throw InvalidParameters("state needs at least one party");
    for (int d : dims)
        if (d < 2)
            throw InvalidParameters("local dimension must be >= 2, got " + std::to_string(d));
}

inline Eigen::Index total_dim(const std::vector<int>& dims) {
    Eigen::Index n = 1;
    for (int d : dims) n *= d;
    return n;
}

// |digits> -> flat index, big-endian in party order.
inline Eigen::Index basis_index(const std::vector<int>& dims, const std::vector<int>& digits) {
    if (digits.size() != dims.size())
        throw LengthMismatch("digit count does not match party count");
    Eigen::Index idx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (digits[k] < 0 || digits[k] >= dims[k])
            throw InvalidParameters("digit " + std::to_string(digits[k]) +
                                    " out of range for local dimension " + std::to_string(dims[k]));
        idx = idx * dims[k] + digits[k];
    }
    return idx;
}

// flat index -> per-party digits.
inline std::vector<int> basis_digits(const std::vector<int>& dims, Eigen::Index index) {
    std::vector<int> digits(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        digits[k] = static_cast<int>(index % dims[k]);
        index /= dims[k];
    }
    return digits;
}

// ---------------------------------------------------------------------------
// PureState

template <typename Scalar = double>
struct PureState {
    std::vector<int> dims;        // local dimension per party, each >= 2
    ComplexVector<Scalar> amps;   // length prod(dims), big-endian party order

    int num_parties() const { return static_cast<int>(dims.size()); }
    Eigen::Index dim() const { return amps.size(); }
    Scalar squared_norm() const { return amps.squaredNorm(); }
};

using PureStated = PureState<double>;

// Builds a validated state. With normalize=false the squared norm must already
// be within norm_tol of one; with normalize=true the amplitudes are rescaled.
template <typename Scalar = double>
PureState<Scalar> make_state(std::vector<int> dims, ComplexVector<Scalar> amps,
                             bool normalize = false,
                             const Tolerances<Scalar>& tol = {}) {
    check_dims(dims);
    if (amps.size() != total_dim(dims))
        throw LengthMismatch("expected " + std::to_string(total_dim(dims)) +
                             " amplitudes, got " + std::to_string(amps.size()));
    const Scalar n2 = amps.squaredNorm();
    if (n2 <= tol.norm_tol * tol.norm_tol)
        throw ZeroVector("all amplitudes are (near) zero");
    if (normalize) {
        amps /= std::sqrt(n2);
    } else if (std::abs(n2 - Scalar(1)) > tol.norm_tol) {
        throw NotNormalized("squared norm is " + std::to_string(static_cast<double>(n2)) +
                            ", off unit by more than norm_tol");
    }
    return PureState<Scalar>{std::move(dims), std::move(amps)};
}

template <typename Scalar>
std::complex<Scalar> inner_product(const PureState<Scalar>& a, const PureState<Scalar>& b) {
    if (a.dims != b.dims)
        throw DimensionMismatch("states live on different party dimensions");
    return a.amps.dot(b.amps);  // conjugates the left argument
}

template <typename Scalar>
Scalar fidelity(const PureState<Scalar>& a, const PureState<Scalar>& b) {
    return std::norm(inner_product(a, b));
}

// |a> (x) |b>, with a's parties in front (more significant digits).
template <typename Scalar>
PureState<Scalar> tensor_product(const PureState<Scalar>& a, const PureState<Scalar>& b) {
    std::vector<int> dims = a.dims;
    dims.insert(dims.end(), b.dims.begin(), b.dims.end());
    ComplexVector<Scalar> amps(a.dim() * b.dim());
    for (Eigen::Index i = 0; i < a.dim(); ++i)
        amps.segment(i * b.dim(), b.dim()) = a.amps(i) * b.amps;
    return PureState<Scalar>{std::move(dims), std::move(amps)};
}

// Applies a d_k x d_k unitary on one party, leaving the rest untouched.
template <typename Scalar>
PureState<Scalar> apply_local_unitary(const PureState<Scalar>& psi, int party,
                                      const ComplexMatrix<Scalar>& u) {
    if (party < 0 || party >= psi.num_parties())
        throw InvalidParameters("party index out of range");
    const int d = psi.dims[party];
    if (u.rows() != d || u.cols() != d)
        throw DimensionMismatch("unitary dimension does not match local dimension");

    // stride of the target digit and size of the block below it
    Eigen::Index below = 1;
    for (std::size_t k = party + 1; k < psi.dims.size(); ++k) below *= psi.dims[k];

    PureState<Scalar> out{psi.dims, ComplexVector<Scalar>::Zero(psi.dim())};
    for (Eigen::Index base = 0; base < psi.dim(); base += below * d) {
        for (Eigen::Index low = 0; low < below; ++low) {
            for (int r = 0; r < d; ++r) {
                std::complex<Scalar> acc(0);
                for (int c = 0; c < d; ++c)
                    acc += u(r, c) * psi.amps(base + c * below + low);
                out.amps(base + r * below + low) = acc;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bipartition: the focus subset of parties (side A) versus its complement.

class Bipartition {
public:
    explicit Bipartition(std::vector<int> focus) : focus_(std::move(focus)) {
        std::sort(focus_.begin(), focus_.end());
        focus_.erase(std::unique(focus_.begin(), focus_.end()), focus_.end());
        if (focus_.empty())
            throw InvalidBipartition("focus must be nonempty");
        if (focus_.front() < 0)
            throw InvalidBipartition("party indices must be nonnegative");
    }

    Bipartition(std::initializer_list<int> focus) : Bipartition(std::vector<int>(focus)) {}

    const std::vector<int>& focus() const { return focus_; }

    // Validates against a party count and returns the complement side.
    std::vector<int> complement(int num_parties) const {
        if (focus_.back() >= num_parties)
            throw InvalidBipartition("focus party " + std::to_string(focus_.back()) +
                                     " out of range for " + std::to_string(num_parties) + " parties");
        if (static_cast<int>(focus_.size()) == num_parties)
            throw InvalidBipartition("focus must be a proper subset of the parties");
        std::vector<int> comp;
        comp.reserve(num_parties - focus_.size());
        std::size_t f = 0;
        for (int k = 0; k < num_parties; ++k) {
            if (f < focus_.size() && focus_[f] == k)
                ++f;
            else
                comp.push_back(k);
        }
        return comp;
    }

    // "0|12"-style label relative to a total party count.
    std::string label(int num_parties) const {
        std::string s;
        for (int k : focus_) s += std::to_string(k);
        s += '|';
        for (int k : complement(num_parties)) s += std::to_string(k);
        return s;
    }

    friend bool operator==(const Bipartition& a, const Bipartition& b) {
        return a.focus_ == b.focus_;
    }

private:
    std::vector<int> focus_;
};

// All bipartitions with a single-party focus, in party order.
inline std::vector<Bipartition> single_party_splits(int num_parties) {
    std::vector<Bipartition> out;
    out.reserve(num_parties);
    for (int k = 0; k < num_parties; ++k) out.push_back(Bipartition{k});
    return out;
}

// Every proper nonempty focus subset (2^n - 2 of them), by increasing bitmask.
inline std::vector<Bipartition> all_splits(int num_parties) {
    std::vector<Bipartition> out;
    for (unsigned mask = 1; mask + 1 < (1u << num_parties); ++mask) {
        std::vector<int> focus;
        for (int k = 0; k < num_parties; ++k)
            if (mask & (1u << k)) focus.push_back(k);
        out.emplace_back(std::move(focus));
    }
    return out;
}

}  // namespace entgeo
