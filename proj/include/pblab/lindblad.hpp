#pragma once

#include <vector>

#include "pblab/hilbert.hpp"
#include "pblab/model.hpp"

namespace pblab {

/// State on a SpaceConfig. Construction only checks shape and finiteness;
/// the physical invariants are queried with the *_error accessors.
class DensityMatrix {
public:
    DensityMatrix(SpaceConfig space, Matrix entries);

    static DensityMatrix pure(SpaceConfig space, const Vector& psi);
    static DensityMatrix basis_state(SpaceConfig space, AtomState atom, int photons);

    const SpaceConfig& space() const noexcept { return space_; }
    int dim() const noexcept { return space_.dim(); }
    const Matrix& matrix() const noexcept { return m_; }

    double trace_error() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;

    Complex expectation(const Operator& op) const;

private:
    SpaceConfig space_;
    Matrix m_;
};

/// Superoperator acting on column-stacked density matrices:
/// vec(ρ)[i + d·j] = ρ(i, j).
class Liouvillian {
public:
    Liouvillian(SpaceConfig space, Matrix entries);

    const SpaceConfig& space() const noexcept { return space_; }
    int dim() const noexcept { return space_.dim(); }
    const Matrix& matrix() const noexcept { return m_; }

    Matrix apply(const Matrix& rho) const;

    /// ‖vec(1)ᴴ L‖, zero for a trace-preserving generator.
    double trace_preservation_error() const;

private:
    SpaceConfig space_;
    Matrix m_;
};

Vector vectorize(const Matrix& rho);
Matrix unvectorize(const Vector& v, int dim);

/// dρ/dt = i[ρ,H] + κ D[a]ρ + γ D[σ₋]ρ in superoperator form.
Liouvillian build_liouvillian(const Operator& h_rot, const ModelParams& params);

/// Same right-hand side evaluated with matrix products, term by term.
Matrix master_equation_rhs(const Operator& h_rot, const ModelParams& params, const Matrix& rho);

/// Trace-normalized null vector of L.
///
/// The population row with the largest diagonal magnitude is replaced by the
/// trace constraint and the square system is solved by sparse LU with
/// iterative refinement in extended precision. The result is Hermitized and
/// trace-renormalized.
///
/// Throws SingularSystem when the bordered system is numerically singular
/// (degenerate steady states), UnphysicalState when the minimum eigenvalue is
/// below -1e-8.
DensityMatrix steady_state(const Liouvillian& L);

/// ‖L vec(ρ)‖₂
double steady_state_residual(const Liouvillian& L, const DensityMatrix& rho);

/// P_n = Tr[(|n⟩⟨n| ⊗ 1) ρ]
double photon_distribution(const DensityMatrix& rho, int n);
std::vector<double> photon_distribution(const DensityMatrix& rho);

double mean_photon_number(const DensityMatrix& rho);

/// Tr(a†ᵏ aᵏ ρ) = Σ n!/(n-k)! P_n
double factorial_moment(const DensityMatrix& rho, int k);

/// g⁽ᵏ⁾(0) for k ∈ {2, 3, 4}; throws VacuumState when ⟨a†a⟩ ≤ 1e-14.
double correlation_g(const DensityMatrix& rho, int order);

inline constexpr double vacuum_threshold = 1e-14;

}  // namespace pblab
