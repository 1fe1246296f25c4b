/*
 * This code is part of qcorr.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy
 * of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qmath.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rng.hpp"

namespace qcorr {

namespace {

const Complex kI(0.0, 1.0);

void check_power_of_two(int n_qubits, const Matrix& m, const char* what) {
  if (n_qubits < 1) throw std::invalid_argument(std::string(what) + ": n_qubits must be >= 1");
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument(std::string(what) + ": matrix dimension does not match qubit count");
}

}  // namespace

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

double hermiticity_error(const Matrix& m) { return max_abs(m - m.adjoint().eval()); }

double unitarity_error(const Matrix& u) {
  Matrix g = u.adjoint() * u;
  g -= Matrix::Identity(u.rows(), u.cols());
  return max_abs(g);
}

double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DensityMatrix DensityMatrix::from_matrix(int n_qubits, Matrix m) {
  check_power_of_two(n_qubits, m, "DensityMatrix");
  if (hermiticity_error(m) > kHermitianTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  if (min_eigenvalue(m) < -kPsdTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
  return DensityMatrix{n_qubits, std::move(m)};
}

DensityMatrix DensityMatrix::pure(int n_qubits, const CVector& psi) {
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  if (psi.size() != d) throw std::invalid_argument("DensityMatrix::pure: bad vector size");
  const double norm = psi.norm();
  if (norm < 1e-14) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  CVector v = psi / norm;
  return DensityMatrix{n_qubits, v * v.adjoint()};
}

DensityMatrix DensityMatrix::basis_state(int n_qubits, std::size_t index) {
  const auto d = dim_of(n_qubits);
  if (index >= d) throw std::invalid_argument("DensityMatrix::basis_state: index out of range");
  Matrix m = Matrix::Zero(d, d);
  m(index, index) = 1.0;
  return DensityMatrix{n_qubits, std::move(m)};
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  const auto d = dim_of(n_qubits);
  return DensityMatrix{n_qubits, Matrix::Identity(d, d) / static_cast<double>(d)};
}

UnitaryMatrix UnitaryMatrix::from_matrix(int n_qubits, Matrix m) {
  check_power_of_two(n_qubits, m, "UnitaryMatrix");
  if (unitarity_error(m) > kUnitaryTol)
    throw std::invalid_argument("UnitaryMatrix: not unitary within tolerance");
  return UnitaryMatrix{n_qubits, std::move(m)};
}

UnitaryMatrix UnitaryMatrix::identity(int n_qubits) {
  const auto d = dim_of(n_qubits);
  return UnitaryMatrix{n_qubits, Matrix::Identity(d, d)};
}

int PauliWord::weight() const {
  int w = 0;
  for (Pauli p : letters)
    if (p != Pauli::I) ++w;
  return w;
}

PauliWord PauliWord::from_index(std::uint64_t index, int n_qubits) {
  PauliWord w;
  w.letters.assign(n_qubits, Pauli::I);
  for (int q = n_qubits - 1; q >= 0; --q) {
    w.letters[q] = static_cast<Pauli>(index & 3u);
    index >>= 2;
  }
  return w;
}

std::uint64_t PauliWord::index() const {
  std::uint64_t idx = 0;
  for (Pauli p : letters) idx = (idx << 2) | static_cast<std::uint64_t>(p);
  return idx;
}

PauliWord PauliWord::from_string(const std::string& s) {
  PauliWord w;
  w.letters.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case 'I': w.letters.push_back(Pauli::I); break;
      case 'X': w.letters.push_back(Pauli::X); break;
      case 'Y': w.letters.push_back(Pauli::Y); break;
      case 'Z': w.letters.push_back(Pauli::Z); break;
      default: throw std::invalid_argument("PauliWord: invalid letter");
    }
  }
  return w;
}

std::string PauliWord::str() const {
  static const char names[] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  s.reserve(letters.size());
  for (Pauli p : letters) s.push_back(names[static_cast<int>(p)]);
  return s;
}

PauliWord PauliWord::identity(int n_qubits) {
  PauliWord w;
  w.letters.assign(n_qubits, Pauli::I);
  return w;
}

PauliWord PauliWord::single(int n_qubits, int qubit, Pauli p) {
  if (qubit < 0 || qubit >= n_qubits) throw std::invalid_argument("PauliWord::single: bad qubit");
  PauliWord w = identity(n_qubits);
  w.letters[qubit] = p;
  return w;
}

namespace {

// single-letter products: a*b = i^phase * letter
struct LetterProduct {
  Pauli letter;
  int phase;
};

LetterProduct letter_mul(Pauli a, Pauli b) {
  if (a == Pauli::I) return {b, 0};
  if (b == Pauli::I) return {a, 0};
  if (a == b) return {Pauli::I, 0};
  // XY=iZ, YZ=iX, ZX=iY; reversed order picks up i^3
  static const Pauli third[4][4] = {
      {Pauli::I, Pauli::I, Pauli::I, Pauli::I},
      {Pauli::I, Pauli::I, Pauli::Z, Pauli::Y},
      {Pauli::I, Pauli::Z, Pauli::I, Pauli::X},
      {Pauli::I, Pauli::Y, Pauli::X, Pauli::I}};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  const bool forward = (ib - ia + 3) % 3 == 1;  // X->Y->Z->X cycle
  return {third[ia][ib], forward ? 1 : 3};
}

}  // namespace

PauliProduct pauli_mul(const PauliWord& a, const PauliWord& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pauli_mul: length mismatch");
  PauliProduct out;
  out.word.letters.resize(a.letters.size());
  int phase = 0;
  for (std::size_t q = 0; q < a.letters.size(); ++q) {
    LetterProduct lp = letter_mul(a.letters[q], b.letters[q]);
    out.word.letters[q] = lp.letter;
    phase += lp.phase;
  }
  out.phase_power = phase & 3;
  return out;
}

bool pauli_commute(const PauliWord& a, const PauliWord& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pauli_commute: length mismatch");
  int anti = 0;
  for (std::size_t q = 0; q < a.letters.size(); ++q) {
    Pauli x = a.letters[q], y = b.letters[q];
    if (x != Pauli::I && y != Pauli::I && x != y) ++anti;
  }
  return (anti & 1) == 0;
}

const Matrix& pauli_matrix(Pauli p) {
  static const Matrix mats[4] = {
      (Matrix(2, 2) << 1, 0, 0, 1).finished(),
      (Matrix(2, 2) << 0, 1, 1, 0).finished(),
      (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (Matrix(2, 2) << 1, 0, 0, -1).finished()};
  return mats[static_cast<int>(p)];
}

Matrix matrix_of(const PauliWord& w) {
  Matrix m = Matrix::Identity(1, 1);
  for (Pauli p : w.letters) m = kron(m, pauli_matrix(p));
  return m;
}

namespace {

// For row r of P_w the single nonzero sits at column r ^ xmask with value
// prod over qubits of the letter entry.
struct SparsePauli {
  std::size_t xmask = 0;
  std::vector<Complex> row_value;  // indexed by row

  explicit SparsePauli(const PauliWord& w) {
    const int n = w.size();
    const std::size_t d = dim_of(n);
    for (int q = 0; q < n; ++q) {
      Pauli p = w.letters[q];
      if (p == Pauli::X || p == Pauli::Y) xmask |= (std::size_t{1} << (n - 1 - q));
    }
    row_value.assign(d, Complex(1.0, 0.0));
    for (std::size_t r = 0; r < d; ++r) {
      Complex v(1.0, 0.0);
      for (int q = 0; q < n; ++q) {
        const int bit = static_cast<int>((r >> (n - 1 - q)) & 1u);
        switch (w.letters[q]) {
          case Pauli::I:
          case Pauli::X:
            break;
          case Pauli::Y:
            v *= bit ? Complex(0, 1) : Complex(0, -1);
            break;
          case Pauli::Z:
            if (bit) v = -v;
            break;
        }
      }
      row_value[r] = v;
    }
  }
};

}  // namespace

Matrix pauli_left_mul(const PauliWord& w, const Matrix& m) {
  SparsePauli sp(w);
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    out.row(r) = sp.row_value[r] * m.row(static_cast<Eigen::Index>(r ^ static_cast<Eigen::Index>(sp.xmask)));
  return out;
}

Matrix pauli_right_mul(const Matrix& m, const PauliWord& w) {
  SparsePauli sp(w);
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const auto src = static_cast<Eigen::Index>(static_cast<std::size_t>(c) ^ sp.xmask);
    out.col(c) = sp.row_value[src] * m.col(src);
  }
  return out;
}

Complex pauli_expectation(const Matrix& rho, const PauliWord& w) {
  SparsePauli sp(w);
  Complex acc(0.0, 0.0);
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    const auto c = static_cast<Eigen::Index>(static_cast<std::size_t>(r) ^ sp.xmask);
    acc += sp.row_value[r] * rho(c, r);
  }
  return acc;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix{a.n_qubits + b.n_qubits, kron(a.data, b.data)};
}

UnitaryMatrix tensor_product(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  return UnitaryMatrix{a.n_qubits + b.n_qubits, kron(a.data, b.data)};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::vector<int> ks = keep;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (int q : ks)
    if (q < 0 || q >= rho.n_qubits) throw std::invalid_argument("partial_trace: qubit out of range");

  const int n = rho.n_qubits;
  const int k = static_cast<int>(ks.size());
  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(ks.begin(), ks.end(), q)) traced.push_back(q);

  const std::size_t dk = dim_of(k);
  const std::size_t dt = std::size_t{1} << traced.size();
  Matrix out = Matrix::Zero(dk, dk);

  // bit position (from the left) of qubit q in the full index
  auto spread = [&](std::size_t bits, const std::vector<int>& qubits) {
    std::size_t full = 0;
    for (std::size_t m = 0; m < qubits.size(); ++m) {
      const std::size_t bit = (bits >> (qubits.size() - 1 - m)) & 1u;
      full |= bit << (n - 1 - qubits[m]);
    }
    return full;
  };

  for (std::size_t a = 0; a < dk; ++a) {
    const std::size_t fa = spread(a, ks);
    for (std::size_t b = 0; b < dk; ++b) {
      const std::size_t fb = spread(b, ks);
      Complex acc(0.0, 0.0);
      for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t ft = spread(t, traced);
        acc += rho.data(fa | ft, fb | ft);
      }
      out(a, b) = acc;
    }
  }
  return DensityMatrix{k, std::move(out)};
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.data - b.data, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.data, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam < 1e-12) continue;  // includes clamping of small negatives
    s -= lam * std::log2(lam);
  }
  return s;
}

double purity(const DensityMatrix& rho) { return (rho.data * rho.data).trace().real(); }

double state_fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  Eigen::SelfAdjointEigenSolver<Matrix> ea(a.data);
  Eigen::VectorXd lam = ea.eigenvalues().cwiseMax(0.0);
  Matrix sqrt_a = ea.eigenvectors() * lam.cwiseSqrt().asDiagonal() *
                  ea.eigenvectors().adjoint();
  Matrix inner = sqrt_a * b.data * sqrt_a;
  Eigen::SelfAdjointEigenSolver<Matrix> ei(inner, Eigen::EigenvaluesOnly);
  double f = 0.0;
  for (Eigen::Index i = 0; i < ei.eigenvalues().size(); ++i)
    f += std::sqrt(std::max(0.0, ei.eigenvalues()(i)));
  return f * f;
}

Matrix partial_transpose(const Matrix& m, int n_qubits, const std::vector<int>& cut) {
  std::size_t mask = 0;
  for (int q : cut) {
    if (q < 0 || q >= n_qubits) throw std::invalid_argument("partial_transpose: qubit out of range");
    mask |= std::size_t{1} << (n_qubits - 1 - q);
  }
  const std::size_t d = dim_of(n_qubits);
  Matrix out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const std::size_t rr = (r & ~mask) | (c & mask);
      const std::size_t cc = (c & ~mask) | (r & mask);
      out(rr, cc) = m(r, c);
    }
  }
  return out;
}

double negativity(const DensityMatrix& rho, const std::vector<int>& cut) {
  if (cut.empty() || static_cast<int>(cut.size()) >= rho.n_qubits)
    throw std::invalid_argument("negativity: trivial bipartition");
  Matrix pt = partial_transpose(rho.data, rho.n_qubits, cut);
  Eigen::SelfAdjointEigenSolver<Matrix> es(pt, Eigen::EigenvaluesOnly);
  double neg = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam < 0.0) neg -= lam;
  }
  return neg;
}

std::array<double, 3> bloch_vector(const DensityMatrix& rho) {
  if (rho.n_qubits != 1) throw std::invalid_argument("bloch_vector: single qubit only");
  return {(rho.data * pauli_matrix(Pauli::X)).trace().real(),
          (rho.data * pauli_matrix(Pauli::Y)).trace().real(),
          (rho.data * pauli_matrix(Pauli::Z)).trace().real()};
}

DensityMatrix from_bloch(double x, double y, double z) {
  Matrix m = 0.5 * (Matrix::Identity(2, 2) + x * pauli_matrix(Pauli::X) +
                    y * pauli_matrix(Pauli::Y) + z * pauli_matrix(Pauli::Z));
  return DensityMatrix{1, std::move(m)};
}

Matrix hermitian_exp(const Matrix& h, double scale) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  CVector phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases(i) = std::exp(Complex(0.0, -scale * es.eigenvalues()(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix haar_unitary(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase ambiguity so the distribution is exactly Haar
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0) ? d / a : Complex(1.0, 0.0);
  }
  return q;
}

CVector random_state_vector(int n_qubits, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  CVector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex(rng.normal(), rng.normal());
  v /= v.norm();
  return v;
}

DensityMatrix random_density_matrix(int n_qubits, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix{n_qubits, std::move(rho)};
}

}  // namespace qcorr
