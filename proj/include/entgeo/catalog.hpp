// Named states: the four Bell states, GHZ(n, d), the three-qubit W state, and
// computational basis (product) states.

#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "entgeo/state.hpp"

namespace entgeo {

struct NamedState {
    enum class Kind { PhiPlus, PhiMinus, PsiPlus, PsiMinus, GHZ, W3, ProductBasis };

    Kind kind;
    int ghz_parties = 0;
    int ghz_dim = 0;
    std::vector<int> basis_dims;
    std::vector<int> basis_digits;

    static NamedState phi_plus() { return {Kind::PhiPlus}; }
    static NamedState phi_minus() { return {Kind::PhiMinus}; }
    static NamedState psi_plus() { return {Kind::PsiPlus}; }
    static NamedState psi_minus() { return {Kind::PsiMinus}; }
    static NamedState w3() { return {Kind::W3}; }

    static NamedState ghz(int parties, int local_dim = 2) {
        NamedState n{Kind::GHZ};
        n.ghz_parties = parties;
        n.ghz_dim = local_dim;
        return n;
    }

    static NamedState product_basis(std::vector<int> dims, std::vector<int> digits) {
        NamedState n{Kind::ProductBasis};
        n.basis_dims = std::move(dims);
        n.basis_digits = std::move(digits);
        return n;
    }
};

namespace detail {

template <typename Scalar>
PureState<Scalar> bell(int hot_a, int hot_b, Scalar sign) {
    ComplexVector<Scalar> amps = ComplexVector<Scalar>::Zero(4);
    const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
    amps(hot_a) = inv_sqrt2;
    amps(hot_b) = sign * inv_sqrt2;
    return PureState<Scalar>{{2, 2}, std::move(amps)};
}

}  // namespace detail

template <typename Scalar = double>
PureState<Scalar> catalog(const NamedState& name) {
    using Kind = NamedState::Kind;
    switch (name.kind) {
        case Kind::PhiPlus:
            return detail::bell<Scalar>(0, 3, Scalar(1));
        case Kind::PhiMinus:
            return detail::bell<Scalar>(0, 3, Scalar(-1));
        case Kind::PsiPlus:
            return detail::bell<Scalar>(1, 2, Scalar(1));
        case Kind::PsiMinus:
            return detail::bell<Scalar>(1, 2, Scalar(-1));
        case Kind::W3: {
            ComplexVector<Scalar> amps = ComplexVector<Scalar>::Zero(8);
            const Scalar c = Scalar(1) / std::sqrt(Scalar(3));
            amps(1) = c;  // |001>
            amps(2) = c;  // |010>
            amps(4) = c;  // |100>
            return PureState<Scalar>{{2, 2, 2}, std::move(amps)};
        }
        case Kind::GHZ: {
            const int n = name.ghz_parties;
            const int d = name.ghz_dim;
            if (n < 2 || d < 2)
                throw InvalidParameters("GHZ needs >= 2 parties of local dimension >= 2");
            std::vector<int> dims(n, d);
            ComplexVector<Scalar> amps = ComplexVector<Scalar>::Zero(total_dim(dims));
            const Scalar c = Scalar(1) / std::sqrt(Scalar(d));
            for (int k = 0; k < d; ++k)
                amps(basis_index(dims, std::vector<int>(n, k))) = c;  // |kk...k>
            return PureState<Scalar>{std::move(dims), std::move(amps)};
        }
        case Kind::ProductBasis: {
            check_dims(name.basis_dims);
            if (name.basis_digits.size() != name.basis_dims.size())
                throw InvalidParameters("digit count does not match dims");
            for (std::size_t k = 0; k < name.basis_dims.size(); ++k)
                if (name.basis_digits[k] < 0 || name.basis_digits[k] >= name.basis_dims[k])
                    throw InvalidParameters("basis digit out of range");
            ComplexVector<Scalar> amps = ComplexVector<Scalar>::Zero(total_dim(name.basis_dims));
            amps(basis_index(name.basis_dims, name.basis_digits)) = Scalar(1);
            return PureState<Scalar>{name.basis_dims, std::move(amps)};
        }
    }
    throw UnknownName("unhandled catalog entry");
}

// Names accepted by parse_named_state, with the parameterized syntax spelled
// out for the CLI's catalog listing.
inline std::vector<std::pair<std::string, std::string>> catalog_entries() {
    return {
        {"PhiPlus", "(|00> + |11>)/sqrt(2)"},
        {"PhiMinus", "(|00> - |11>)/sqrt(2)"},
        {"PsiPlus", "(|01> + |10>)/sqrt(2)"},
        {"PsiMinus", "(|01> - |10>)/sqrt(2)"},
        {"GHZ(n,d)", "(|0..0> + ... + |d-1..d-1>)/sqrt(d), n parties (d optional, default 2)"},
        {"W3", "(|001> + |010> + |100>)/sqrt(3)"},
        {"ProductBasis(d1x..xdn,digits)", "computational basis state |digits>"},
    };
}

// Parses e.g. "W3", "GHZ(3,2)", "GHZ(4)", "ProductBasis(2x3,01)".
inline NamedState parse_named_state(std::string_view text) {
    const auto fail = [&] {
        std::string names;
        for (const auto& [n, _] : catalog_entries()) names += n + " ";
        throw UnknownName("'" + std::string(text) + "'; known names: " + names);
    };

    std::string s(text);
    const auto paren = s.find('(');
    const std::string head = s.substr(0, paren);
    std::string args;
    if (paren != std::string::npos) {
        if (s.back() != ')') fail();
        args = s.substr(paren + 1, s.size() - paren - 2);
    }

    if (head == "PhiPlus") return NamedState::phi_plus();
    if (head == "PhiMinus") return NamedState::phi_minus();
    if (head == "PsiPlus") return NamedState::psi_plus();
    if (head == "PsiMinus") return NamedState::psi_minus();
    if (head == "W3") return NamedState::w3();

    if (head == "GHZ") {
        int n = 0, d = 2;
        char comma = 0;
        std::istringstream in(args);
        if (!(in >> n)) fail();
        if (in >> comma) {
            if (comma != ',' || !(in >> d)) fail();
        }
        if (!in.eof() && in.fail()) fail();
        if (n < 2 || d < 2)
            throw InvalidParameters("GHZ needs >= 2 parties of local dimension >= 2");
        return NamedState::ghz(n, d);
    }

    if (head == "ProductBasis") {
        const auto comma = args.find(',');
        if (comma == std::string::npos) fail();
        std::vector<int> dims;
        std::istringstream in(args.substr(0, comma));
        std::string piece;
        while (std::getline(in, piece, 'x')) {
            try {
                dims.push_back(std::stoi(piece));
            } catch (const std::exception&) {
                fail();
            }
        }
        std::vector<int> digits;
        for (char c : args.substr(comma + 1)) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
            digits.push_back(c - '0');
        }
        return NamedState::product_basis(std::move(dims), std::move(digits));
    }

    fail();
    return NamedState::w3();  // unreachable
}

}  // namespace entgeo
