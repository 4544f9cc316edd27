#include "pblab/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "pblab/error.hpp"

namespace pblab {

DensityMatrix::DensityMatrix(SpaceConfig space, Matrix entries)
    : space_(space), m_(std::move(entries)) {
    if (m_.rows() != space_.dim() || m_.cols() != space_.dim())
        throw DimensionMismatch("density matrix shape does not match space dimension " +
                                std::to_string(space_.dim()));
    if (!m_.allFinite()) throw InvalidArgument("density matrix has non-finite entries");
}

DensityMatrix DensityMatrix::pure(SpaceConfig space, const Vector& psi) {
    if (psi.size() != space.dim()) throw DimensionMismatch("state vector length mismatch");
    const Vector u = psi / psi.norm();
    return {space, u * u.adjoint()};
}

DensityMatrix DensityMatrix::basis_state(SpaceConfig space, AtomState atom, int photons) {
    return pure(space, basis_vector(space, atom, photons));
}

double DensityMatrix::trace_error() const { return std::abs(m_.trace() - 1.0); }

double DensityMatrix::hermiticity_error() const { return (m_ - m_.adjoint()).norm(); }

double DensityMatrix::min_eigenvalue() const {
    const Matrix h = 0.5 * (m_ + m_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

Complex DensityMatrix::expectation(const Operator& op) const {
    if (!(op.space() == space_)) throw DimensionMismatch("operator acts on a different space");
    return (op.matrix() * m_).trace();
}

Liouvillian::Liouvillian(SpaceConfig space, Matrix entries) : space_(space), m_(std::move(entries)) {
    const Eigen::Index big = static_cast<Eigen::Index>(space_.dim()) * space_.dim();
    if (m_.rows() != big || m_.cols() != big)
        throw DimensionMismatch("Liouvillian shape does not match squared space dimension");
}

Matrix Liouvillian::apply(const Matrix& rho) const {
    if (rho.rows() != dim() || rho.cols() != dim())
        throw DimensionMismatch("density matrix shape does not match Liouvillian");
    return unvectorize(m_ * vectorize(rho), dim());
}

double Liouvillian::trace_preservation_error() const {
    const int d = dim();
    Eigen::RowVectorXcd t = Eigen::RowVectorXcd::Zero(m_.cols());
    for (int i = 0; i < d; ++i) t(i * (d + 1)) = 1.0;
    return (t * m_).norm();
}

Vector vectorize(const Matrix& rho) {
    return Eigen::Map<const Vector>(rho.data(), rho.size());
}

Matrix unvectorize(const Vector& v, int dim) {
    if (v.size() != static_cast<Eigen::Index>(dim) * dim)
        throw DimensionMismatch("vector length is not dim^2");
    return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

namespace {

// L += coeff · (X ⊗ Y), skipping structural zeros of the small factors.
void add_kron(Matrix& L, const Matrix& x, const Matrix& y, Complex coeff) {
    const Eigen::Index d = y.rows();
    for (Eigen::Index q = 0; q < x.cols(); ++q)
        for (Eigen::Index p = 0; p < x.rows(); ++p) {
            const Complex xpq = x(p, q);
            if (xpq == 0.0) continue;
            for (Eigen::Index j = 0; j < d; ++j)
                for (Eigen::Index i = 0; i < d; ++i) {
                    const Complex yij = y(i, j);
                    if (yij == 0.0) continue;
                    L(p * d + i, q * d + j) += coeff * xpq * yij;
                }
        }
}

void add_dissipator(Matrix& L, const Matrix& c, double rate) {
    if (rate == 0.0) return;
    const Matrix id = Matrix::Identity(c.rows(), c.cols());
    const Matrix cdc = c.adjoint() * c;
    // vec(AρB) = (Bᵀ ⊗ A) vec(ρ)
    add_kron(L, c.conjugate(), c, rate);
    add_kron(L, id, cdc, -0.5 * rate);
    add_kron(L, cdc.transpose(), id, -0.5 * rate);
}

void require_hermitian(const Operator& h) {
    const double scale = std::max(1.0, h.norm());
    if (h.hermiticity_error() > 1e-12 * scale)
        throw InvalidArgument("Hamiltonian is not Hermitian");
}

}  // namespace

Liouvillian build_liouvillian(const Operator& h_rot, const ModelParams& params) {
    params.validate();
    require_hermitian(h_rot);
    const SpaceConfig& space = h_rot.space();
    const Eigen::Index d = space.dim();
    const Matrix id = Matrix::Identity(d, d);
    const Matrix& h = h_rot.matrix();

    Matrix L = Matrix::Zero(d * d, d * d);
    // i[ρ,H] = -i Hρ + i ρH
    add_kron(L, id, h, Complex(0.0, -1.0));
    add_kron(L, h.transpose(), id, Complex(0.0, 1.0));
    add_dissipator(L, annihilation(space).matrix(), params.kappa);
    add_dissipator(L, atom_operator(AtomOp::lower, space).matrix(), params.gamma);
    return {space, std::move(L)};
}

Matrix master_equation_rhs(const Operator& h_rot, const ModelParams& params, const Matrix& rho) {
    const SpaceConfig& space = h_rot.space();
    if (rho.rows() != space.dim() || rho.cols() != space.dim())
        throw DimensionMismatch("density matrix shape does not match Hamiltonian");
    const Matrix& h = h_rot.matrix();
    const Matrix a = annihilation(space).matrix();
    const Matrix sm = atom_operator(AtomOp::lower, space).matrix();
    const Complex i(0.0, 1.0);

    Matrix out = i * (rho * h - h * rho);
    const Matrix ad = a.adjoint();
    out += 0.5 * params.kappa * (2.0 * a * rho * ad - ad * a * rho - rho * ad * a);
    const Matrix sp = sm.adjoint();
    out += 0.5 * params.gamma * (2.0 * sm * rho * sp - sp * sm * rho - rho * sp * sm);
    return out;
}

namespace {

#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif

struct WideComplex {
    Wide re = 0;
    Wide im = 0;
};

using SparseMatrix = Eigen::SparseMatrix<Complex>;

// r = b - A x with A in double and x accumulated in extended precision.
Vector wide_residual(const SparseMatrix& A, const std::vector<WideComplex>& x, Eigen::Index rhs_row) {
    std::vector<WideComplex> r(x.size());
    r[rhs_row].re = 1;
    for (Eigen::Index col = 0; col < A.outerSize(); ++col) {
        const WideComplex xc = x[col];
        for (SparseMatrix::InnerIterator it(A, col); it; ++it) {
            const Wide ar = it.value().real();
            const Wide ai = it.value().imag();
            WideComplex& ri = r[it.row()];
            ri.re -= ar * xc.re - ai * xc.im;
            ri.im -= ar * xc.im + ai * xc.re;
        }
    }
    Vector out(static_cast<Eigen::Index>(x.size()));
    for (std::size_t k = 0; k < r.size(); ++k)
        out(static_cast<Eigen::Index>(k)) = Complex(static_cast<double>(r[k].re), static_cast<double>(r[k].im));
    return out;
}

double max_abs(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

double one_norm(const SparseMatrix& A) {
    double best = 0.0;
    for (Eigen::Index col = 0; col < A.outerSize(); ++col) {
        double sum = 0.0;
        for (SparseMatrix::InnerIterator it(A, col); it; ++it) sum += std::abs(it.value());
        best = std::max(best, sum);
    }
    return best;
}

constexpr int max_refinement_steps = 8;
constexpr double refinement_target = 1e-30;
constexpr double singular_condition = 1e12;
constexpr double negativity_tolerance = 1e-8;

}  // namespace

DensityMatrix steady_state(const Liouvillian& L) {
    const int d = L.dim();
    const Eigen::Index big = static_cast<Eigen::Index>(d) * d;
    const Matrix& m = L.matrix();

    Eigen::Index trace_row = 0;
    double best = -1.0;
    for (int i = 0; i < d; ++i) {
        const Eigen::Index k = static_cast<Eigen::Index>(i) * (d + 1);
        const double mag = std::abs(m(k, k));
        if (mag > best) {
            best = mag;
            trace_row = k;
        }
    }

    std::vector<Eigen::Triplet<Complex>> triplets;
    triplets.reserve(static_cast<std::size_t>(big) * 12);
    for (Eigen::Index col = 0; col < big; ++col)
        for (Eigen::Index row = 0; row < big; ++row) {
            if (row == trace_row) continue;
            const Complex v = m(row, col);
            if (v != 0.0) triplets.emplace_back(row, col, v);
        }
    for (int i = 0; i < d; ++i)
        triplets.emplace_back(trace_row, static_cast<Eigen::Index>(i) * (d + 1), 1.0);

    SparseMatrix A(big, big);
    A.setFromTriplets(triplets.begin(), triplets.end());
    A.makeCompressed();

    Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success)
        throw SingularSystem("steady-state factorization failed: " + lu.lastErrorMessage());

    Vector b = Vector::Zero(big);
    b(trace_row) = 1.0;
    Vector x = lu.solve(b);
    if (lu.info() != Eigen::Success || !x.allFinite())
        throw SingularSystem("steady-state solve failed");

    // Norm estimate of A⁻¹ from a fixed probe vector; a (near-)degenerate null
    // space of L shows up as an enormous response.
    Vector probe(big);
    for (Eigen::Index k = 0; k < big; ++k) probe(k) = (k % 2 == 0 ? 1.0 : -1.0) / double(1 + k % 7);
    const Vector response = lu.solve(probe);
    const double cond = one_norm(A) * response.cwiseAbs().sum() / probe.cwiseAbs().sum();
    if (!std::isfinite(cond) || cond > singular_condition)
        throw SingularSystem("steady state is not unique (condition estimate " + std::to_string(cond) + ")");

    std::vector<WideComplex> xw(static_cast<std::size_t>(big));
    for (Eigen::Index k = 0; k < big; ++k) xw[k] = {x(k).real(), x(k).imag()};
    for (int step = 0; step < max_refinement_steps; ++step) {
        const Vector r = wide_residual(A, xw, trace_row);
        const Vector dx = lu.solve(r);
        for (Eigen::Index k = 0; k < big; ++k) {
            xw[k].re += dx(k).real();
            xw[k].im += dx(k).imag();
        }
        if (max_abs(dx) <= refinement_target * std::max(1.0, max_abs(x))) break;
    }
    for (Eigen::Index k = 0; k < big; ++k)
        x(k) = Complex(static_cast<double>(xw[k].re), static_cast<double>(xw[k].im));

    Matrix rho = unvectorize(x, d);
    if (max_abs(x) > 1.0 + 1e-6 || (rho - rho.adjoint()).norm() > 1e-6)
        throw SingularSystem("steady-state solution is not a density matrix");
    rho = 0.5 * (rho + rho.adjoint());
    rho /= rho.trace().real();

    DensityMatrix out(L.space(), std::move(rho));
    const double lo = out.min_eigenvalue();
    if (lo < -negativity_tolerance)
        throw UnphysicalState("steady state has eigenvalue " + std::to_string(lo));
    return out;
}

double steady_state_residual(const Liouvillian& L, const DensityMatrix& rho) {
    return (L.matrix() * vectorize(rho.matrix())).norm();
}

double photon_distribution(const DensityMatrix& rho, int n) {
    const SpaceConfig& s = rho.space();
    if (n < 0 || n > s.n_cav_max())
        throw InvalidArgument("photon number " + std::to_string(n) + " outside truncation");
    const int g = s.index(AtomState::ground, n);
    const int e = s.index(AtomState::excited, n);
    return rho.matrix()(g, g).real() + rho.matrix()(e, e).real();
}

std::vector<double> photon_distribution(const DensityMatrix& rho) {
    std::vector<double> p(static_cast<std::size_t>(rho.space().fock_dim()));
    for (int n = 0; n < rho.space().fock_dim(); ++n) p[n] = photon_distribution(rho, n);
    return p;
}

double factorial_moment(const DensityMatrix& rho, int k) {
    if (k < 0) throw InvalidArgument("factorial moment order must be >= 0");
    double sum = 0.0;
    for (int n = k; n < rho.space().fock_dim(); ++n) {
        double falling = 1.0;
        for (int j = 0; j < k; ++j) falling *= n - j;
        sum += falling * photon_distribution(rho, n);
    }
    return sum;
}

double mean_photon_number(const DensityMatrix& rho) { return factorial_moment(rho, 1); }

double correlation_g(const DensityMatrix& rho, int order) {
    if (order < 2 || order > 4) throw InvalidArgument("correlation order must be 2, 3 or 4");
    const double mean = mean_photon_number(rho);
    if (!(mean > vacuum_threshold))
        throw VacuumState("mean photon number " + std::to_string(mean) + " below threshold");
    return std::max(0.0, factorial_moment(rho, order)) / std::pow(mean, order);
}

}  // namespace pblab
