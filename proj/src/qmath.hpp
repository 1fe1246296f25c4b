/*
 * This code is part of qcorr.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy
 * of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QCORR_QMATH_HPP
#define QCORR_QMATH_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Numerical contracts shared across the library.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-8;
inline constexpr double kUnitaryTol = 1e-10;

inline std::size_t dim_of(int n_qubits) { return std::size_t{1} << n_qubits; }

double max_abs(const Matrix& m);
// max-abs deviation ||m - m^dagger||_max
double hermiticity_error(const Matrix& m);
// max-abs deviation ||u^dagger u - 1||_max
double unitarity_error(const Matrix& u);
double min_eigenvalue(const Matrix& hermitian);

// Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of a
// basis-state index.
struct DensityMatrix {
  int n_qubits = 0;
  Matrix data;

  Eigen::Index dim() const { return data.rows(); }

  // Validating factory: Hermitian within 1e-10, unit trace within 1e-10,
  // min eigenvalue >= -1e-8. Throws std::invalid_argument otherwise.
  static DensityMatrix from_matrix(int n_qubits, Matrix m);
  static DensityMatrix pure(int n_qubits, const CVector& psi);
  static DensityMatrix basis_state(int n_qubits, std::size_t index);
  static DensityMatrix maximally_mixed(int n_qubits);
};

struct UnitaryMatrix {
  int n_qubits = 0;
  Matrix data;

  Eigen::Index dim() const { return data.rows(); }

  static UnitaryMatrix from_matrix(int n_qubits, Matrix m);
  static UnitaryMatrix identity(int n_qubits);
};

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

struct PauliWord {
  std::vector<Pauli> letters;

  int size() const { return static_cast<int>(letters.size()); }
  int weight() const;

  // Base-4 index with qubit 0 as the most significant digit (I,X,Y,Z = 0..3).
  static PauliWord from_index(std::uint64_t index, int n_qubits);
  std::uint64_t index() const;

  static PauliWord from_string(const std::string& s);
  std::string str() const;

  static PauliWord identity(int n_qubits);
  static PauliWord single(int n_qubits, int qubit, Pauli p);

  bool operator==(const PauliWord& other) const { return letters == other.letters; }
};

// Product of single-qubit Pauli matrices with phase bookkeeping:
// a * b = i^phase_power * word.
struct PauliProduct {
  PauliWord word;
  int phase_power = 0;  // exponent of i, mod 4
};
PauliProduct pauli_mul(const PauliWord& a, const PauliWord& b);
bool pauli_commute(const PauliWord& a, const PauliWord& b);

const Matrix& pauli_matrix(Pauli p);
Matrix matrix_of(const PauliWord& w);

// Sparse application of a Pauli word (one nonzero per row); O(4^n) instead of
// a dense product.
Matrix pauli_left_mul(const PauliWord& w, const Matrix& m);    // P * m
Matrix pauli_right_mul(const Matrix& m, const PauliWord& w);   // m * P
Complex pauli_expectation(const Matrix& rho, const PauliWord& w);  // tr(rho P)

Matrix kron(const Matrix& a, const Matrix& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);
UnitaryMatrix tensor_product(const UnitaryMatrix& a, const UnitaryMatrix& b);

// Trace out all qubits not in `keep`; result qubits follow ascending original
// index order. Throws on empty or out-of-range keep sets.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// D(rho, sigma) = 1/2 ||rho - sigma||_tr
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// In bits; eigenvalues below 1e-12 are treated as zero.
double von_neumann_entropy(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);

// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2.
double state_fidelity(const DensityMatrix& a, const DensityMatrix& b);

// Transpose the factors in `cut` only.
Matrix partial_transpose(const Matrix& m, int n_qubits, const std::vector<int>& cut);

// Sum of |negative eigenvalues| of the partial transpose across `cut`.
// Throws on a trivial bipartition.
double negativity(const DensityMatrix& rho, const std::vector<int>& cut);

std::array<double, 3> bloch_vector(const DensityMatrix& rho);
DensityMatrix from_bloch(double x, double y, double z);

// exp(-i * h * scale) for Hermitian h, via eigendecomposition.
Matrix hermitian_exp(const Matrix& h, double scale);

// Haar unitary via complex Ginibre + phase-fixed QR.
class Rng;
Matrix haar_unitary(int dim, Rng& rng);
DensityMatrix random_density_matrix(int n_qubits, Rng& rng);
CVector random_state_vector(int n_qubits, Rng& rng);

}  // namespace qcorr

#endif
