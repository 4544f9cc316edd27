#include "pblab/hilbert.hpp"

#include <cmath>
#include <string>

#include "pblab/error.hpp"

namespace pblab {

SpaceConfig::SpaceConfig(int n_cav_max) : n_cav_max_(n_cav_max) {
    if (n_cav_max < min_photons)
        throw InvalidArgument("n_cav_max must be >= 3, got " + std::to_string(n_cav_max));
}

int SpaceConfig::index(AtomState atom, int photons) const {
    if (photons < 0 || photons > n_cav_max_)
        throw InvalidArgument("photon number " + std::to_string(photons) + " outside [0, " +
                              std::to_string(n_cav_max_) + "]");
    return static_cast<int>(atom) * fock_dim() + photons;
}

std::pair<AtomState, int> SpaceConfig::state_of(int index) const {
    if (index < 0 || index >= dim())
        throw InvalidArgument("basis index " + std::to_string(index) + " out of range");
    return {index < fock_dim() ? AtomState::ground : AtomState::excited, index % fock_dim()};
}

Operator::Operator(SpaceConfig space, Matrix entries) : space_(space), m_(std::move(entries)) {
    if (m_.rows() != space_.dim() || m_.cols() != space_.dim())
        throw DimensionMismatch("operator is " + std::to_string(m_.rows()) + "x" +
                                std::to_string(m_.cols()) + " but space dimension is " +
                                std::to_string(space_.dim()));
    if (!m_.allFinite()) throw InvalidArgument("operator has non-finite entries");
}

Operator Operator::zero(SpaceConfig space) {
    return {space, Matrix::Zero(space.dim(), space.dim())};
}

Operator Operator::identity(SpaceConfig space) {
    return {space, Matrix::Identity(space.dim(), space.dim())};
}

Operator Operator::adjoint() const { return {space_, m_.adjoint()}; }

Vector Operator::apply(const Vector& v) const {
    if (v.size() != dim()) throw DimensionMismatch("state vector length does not match operator");
    return m_ * v;
}

Operator& Operator::operator+=(const Operator& rhs) {
    if (!(space_ == rhs.space_)) throw DimensionMismatch("operators act on different spaces");
    m_ += rhs.m_;
    return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
    if (!(space_ == rhs.space_)) throw DimensionMismatch("operators act on different spaces");
    m_ -= rhs.m_;
    return *this;
}

Operator& Operator::operator*=(Complex s) {
    m_ *= s;
    return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
    if (!(lhs.space_ == rhs.space_)) throw DimensionMismatch("operators act on different spaces");
    return {lhs.space_, lhs.m_ * rhs.m_};
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator annihilation(const SpaceConfig& space) {
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (auto atom : {AtomState::ground, AtomState::excited})
        for (int n = 1; n <= space.n_cav_max(); ++n)
            m(space.index(atom, n - 1), space.index(atom, n)) = std::sqrt(static_cast<double>(n));
    return {space, std::move(m)};
}

Operator creation(const SpaceConfig& space) { return annihilation(space).adjoint(); }

Operator number(const SpaceConfig& space) {
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (int i = 0; i < space.dim(); ++i) m(i, i) = space.state_of(i).second;
    return {space, std::move(m)};
}

Operator atom_operator(AtomOp kind, const SpaceConfig& space) {
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (int n = 0; n <= space.n_cav_max(); ++n) {
        const int g = space.index(AtomState::ground, n);
        const int e = space.index(AtomState::excited, n);
        switch (kind) {
            case AtomOp::raise: m(e, g) = 1.0; break;
            case AtomOp::lower: m(g, e) = 1.0; break;
            case AtomOp::sigma_z:
                m(e, e) = 1.0;
                m(g, g) = -1.0;
                break;
            case AtomOp::excited_projector: m(e, e) = 1.0; break;
        }
    }
    return {space, std::move(m)};
}

Operator weighted_excitation(const SpaceConfig& space) {
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (int i = 0; i < space.dim(); ++i) {
        const auto [atom, n] = space.state_of(i);
        m(i, i) = n + (atom == AtomState::excited ? 2 : 0);
    }
    return {space, std::move(m)};
}

Operator fock_projector(const SpaceConfig& space, int photons) {
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (auto atom : {AtomState::ground, AtomState::excited}) {
        const int i = space.index(atom, photons);
        m(i, i) = 1.0;
    }
    return {space, std::move(m)};
}

Vector basis_vector(const SpaceConfig& space, AtomState atom, int photons) {
    Vector v = Vector::Zero(space.dim());
    v(space.index(atom, photons)) = 1.0;
    return v;
}

}  // namespace pblab
