#pragma once

#include <complex>
#include <cstddef>
#include <utility>

#include <Eigen/Dense>

namespace pblab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class AtomState { ground = 0, excited = 1 };

/// Truncated atom ⊗ cavity space. Basis order is atom-slow:
/// |g,0⟩, …, |g,n_max⟩, |e,0⟩, …, |e,n_max⟩.
class SpaceConfig {
public:
    static constexpr int min_photons = 3;

    explicit SpaceConfig(int n_cav_max);

    int n_cav_max() const noexcept { return n_cav_max_; }
    int fock_dim() const noexcept { return n_cav_max_ + 1; }
    int dim() const noexcept { return 2 * (n_cav_max_ + 1); }

    int index(AtomState atom, int photons) const;
    std::pair<AtomState, int> state_of(int index) const;

    friend bool operator==(const SpaceConfig&, const SpaceConfig&) = default;

private:
    int n_cav_max_;
};

/// Dense operator on a SpaceConfig. Entries are checked to be finite.
class Operator {
public:
    Operator(SpaceConfig space, Matrix entries);

    static Operator zero(SpaceConfig space);
    static Operator identity(SpaceConfig space);

    const SpaceConfig& space() const noexcept { return space_; }
    int dim() const noexcept { return space_.dim(); }
    const Matrix& matrix() const noexcept { return m_; }
    Complex operator()(int row, int col) const { return m_(row, col); }

    Operator adjoint() const;
    double norm() const { return m_.norm(); }
    double hermiticity_error() const { return (m_ - m_.adjoint()).norm(); }

    Vector apply(const Vector& v) const;

    Operator& operator+=(const Operator& rhs);
    Operator& operator-=(const Operator& rhs);
    Operator& operator*=(Complex s);

    friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
    friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
    friend Operator operator*(Operator lhs, Complex s) { return lhs *= s; }
    friend Operator operator*(Complex s, Operator rhs) { return rhs *= s; }
    friend Operator operator*(const Operator& lhs, const Operator& rhs);

private:
    SpaceConfig space_;
    Matrix m_;
};

Operator commutator(const Operator& a, const Operator& b);

enum class AtomOp { raise, lower, sigma_z, excited_projector };

Operator annihilation(const SpaceConfig& space);
Operator creation(const SpaceConfig& space);
Operator number(const SpaceConfig& space);
Operator atom_operator(AtomOp kind, const SpaceConfig& space);

/// N = 2σ₊σ₋ + a†a; diagonal.
Operator weighted_excitation(const SpaceConfig& space);

/// |n⟩⟨n| ⊗ 1_atom.
Operator fock_projector(const SpaceConfig& space, int photons);

Vector basis_vector(const SpaceConfig& space, AtomState atom, int photons);

}  // namespace pblab
