/*
 * This code is part of qcorr.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy
 * of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "channels.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qcorr {

namespace {

constexpr int kMaxChiQubits = 12;

void check_rate(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(what) + ": rate outside [0,1]");
}

}  // namespace

KrausChannel KrausChannel::from_kraus(int n_qubits, std::vector<Matrix> ops) {
  if (ops.empty()) throw std::invalid_argument("KrausChannel: empty Kraus list");
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  for (const auto& a : ops)
    if (a.rows() != d || a.cols() != d)
      throw std::invalid_argument("KrausChannel: operator dimension mismatch");
  return KrausChannel{n_qubits, std::move(ops)};
}

KrausChannel KrausChannel::identity(int n_qubits) {
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  return KrausChannel{n_qubits, {Matrix::Identity(d, d)}};
}

DensityMatrix apply_channel(const KrausChannel& e, const DensityMatrix& rho) {
  if (e.dim() != rho.dim()) throw std::invalid_argument("apply_channel: dimension mismatch");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const auto& a : e.kraus) out.noalias() += a * rho.data * a.adjoint();
  return DensityMatrix{rho.n_qubits, std::move(out)};
}

CptpReport verify_cptp(const KrausChannel& e, double tol) {
  Matrix acc = Matrix::Zero(e.dim(), e.dim());
  for (const auto& a : e.kraus) acc.noalias() += a.adjoint() * a;
  acc -= Matrix::Identity(e.dim(), e.dim());
  const double dev = max_abs(acc);
  return CptpReport{dev, tol, dev <= tol};
}

double RichSyndrome::total() const {
  double s = 0.0;
  for (double x : p) s += x;
  return s;
}

double CoarseSyndrome::total() const {
  double s = 0.0;
  for (double x : p) s += x;
  return s;
}

std::vector<Complex> pauli_coefficients(const Matrix& a) {
  const auto d = static_cast<std::size_t>(a.rows());
  int n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  if ((std::size_t{1} << n) != d || a.cols() != a.rows())
    throw std::invalid_argument("pauli_coefficients: matrix is not 2^n x 2^n");

  const std::size_t total = d * d;
  std::vector<Complex> c(total);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t col = 0; col < d; ++col) c[r * d + col] = a(r, col);

  // Per-qubit contraction: entries indexed by (row bits, col bits); qubit l
  // occupies bit n-1-l of each half.
  for (int l = 0; l < n; ++l) {
    const int j = n - 1 - l;
    const std::size_t hi = std::size_t{1} << (n + j);  // row bit
    const std::size_t lo = std::size_t{1} << j;        // col bit
    for (std::size_t idx = 0; idx < total; ++idx) {
      if (idx & (hi | lo)) continue;
      const Complex a00 = c[idx];
      const Complex a01 = c[idx | lo];
      const Complex a10 = c[idx | hi];
      const Complex a11 = c[idx | hi | lo];
      c[idx] = a00 + a11;                          // I
      c[idx | lo] = a01 + a10;                     // X
      c[idx | hi] = Complex(0, 1) * (a01 - a10);   // Y
      c[idx | hi | lo] = a00 - a11;                // Z
    }
  }

  // Repack interleaved (row-bit, col-bit) digits into base-4 word indices.
  std::vector<Complex> out(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::uint64_t w = 0;
    for (int l = 0; l < n; ++l) {
      const int j = n - 1 - l;
      const std::uint64_t code = (((idx >> (n + j)) & 1u) << 1) | ((idx >> j) & 1u);
      w = (w << 2) | code;
    }
    out[w] = c[idx];
  }
  return out;
}

RichSyndrome chi_diagonal(const KrausChannel& e) {
  if (e.n_qubits > kMaxChiQubits)
    throw std::invalid_argument("chi_diagonal: too many qubits for 4^n enumeration");
  const std::size_t words = std::size_t{1} << (2 * e.n_qubits);
  const double norm = static_cast<double>(words);
  RichSyndrome r;
  r.n_qubits = e.n_qubits;
  r.p.assign(words, 0.0);
  for (const auto& a : e.kraus) {
    const auto coeffs = pauli_coefficients(a);
    for (std::size_t w = 0; w < words; ++w) r.p[w] += std::norm(coeffs[w]) / norm;
  }
  return r;
}

namespace {

// bitmask of faulty qubits for a word index (qubit 0 = MSB of the mask)
inline std::size_t fault_mask(std::uint64_t w, int n) {
  std::size_t mask = 0;
  for (int l = n - 1; l >= 0; --l) {
    if ((w & 3u) != 0) mask |= std::size_t{1} << (n - 1 - l);
    w >>= 2;
  }
  return mask;
}

inline int word_weight(std::uint64_t w) {
  int s = 0;
  while (w) {
    if (w & 3u) ++s;
    w >>= 2;
  }
  return s;
}

}  // namespace

CoarseSyndrome coarse_syndrome(const RichSyndrome& r) {
  CoarseSyndrome d;
  d.n_qubits = r.n_qubits;
  d.p.assign(dim_of(r.n_qubits), 0.0);
  for (std::size_t w = 0; w < r.p.size(); ++w)
    if (r.p[w] != 0.0) d.p[fault_mask(w, r.n_qubits)] += r.p[w];
  return d;
}

WeightProfile weight_profile(const RichSyndrome& r) {
  WeightProfile wp;
  wp.f.assign(r.n_qubits + 1, 0.0);
  for (std::size_t w = 0; w < r.p.size(); ++w)
    if (r.p[w] != 0.0) wp.f[word_weight(w)] += r.p[w];
  wp.alpha = 0.0;
  for (std::size_t s = 0; s < wp.f.size(); ++s) wp.alpha += static_cast<double>(s) * wp.f[s];
  return wp;
}

std::vector<double> qubit_fault_rates(const CoarseSyndrome& d) {
  std::vector<double> r(d.n_qubits, 0.0);
  for (std::size_t b = 0; b < d.p.size(); ++b) {
    if (d.p[b] == 0.0) continue;
    for (int q = 0; q < d.n_qubits; ++q)
      if (b & (std::size_t{1} << (d.n_qubits - 1 - q))) r[q] += d.p[b];
  }
  return r;
}

double pair_correlation(const CoarseSyndrome& d, int i, int j, CorrelationMode mode) {
  if (i == j) throw std::invalid_argument("pair_correlation: i == j");
  if (i < 0 || j < 0 || i >= d.n_qubits || j >= d.n_qubits)
    throw std::invalid_argument("pair_correlation: qubit out of range");
  const std::size_t mi = std::size_t{1} << (d.n_qubits - 1 - i);
  const std::size_t mj = std::size_t{1} << (d.n_qubits - 1 - j);
  double ri = 0.0, rj = 0.0, rij = 0.0;
  for (std::size_t b = 0; b < d.p.size(); ++b) {
    if (d.p[b] == 0.0) continue;
    const bool fi = b & mi;
    const bool fj = b & mj;
    if (fi) ri += d.p[b];
    if (fj) rj += d.p[b];
    if (fi && fj) rij += d.p[b];
  }
  const double cov = rij - ri * rj;
  if (mode == CorrelationMode::covariance) return cov;
  const double var = ri * (1.0 - ri) * rj * (1.0 - rj);
  if (var < 1e-30) throw std::domain_error("pair_correlation: degenerate marginal in pearson mode");
  return cov / std::sqrt(var);
}

KrausChannel depolarizing_channel(int n_qubits, double p) {
  check_rate(p, "depolarizing_channel");
  if (n_qubits > 6)
    throw std::invalid_argument("depolarizing_channel: product Kraus set too large beyond 6 qubits");
  KrausChannel single{1,
                      {std::sqrt(1.0 - p) * pauli_matrix(Pauli::I),
                       std::sqrt(p / 3.0) * pauli_matrix(Pauli::X),
                       std::sqrt(p / 3.0) * pauli_matrix(Pauli::Y),
                       std::sqrt(p / 3.0) * pauli_matrix(Pauli::Z)}};
  KrausChannel out = single;
  for (int q = 1; q < n_qubits; ++q) out = tensor_product(out, single);
  return out;
}

KrausChannel dephasing_channel(int n_qubits, double p) {
  check_rate(p, "dephasing_channel");
  if (n_qubits > 10)
    throw std::invalid_argument("dephasing_channel: product Kraus set too large beyond 10 qubits");
  KrausChannel single{1,
                      {std::sqrt(1.0 - p) * pauli_matrix(Pauli::I),
                       std::sqrt(p) * pauli_matrix(Pauli::Z)}};
  KrausChannel out = single;
  for (int q = 1; q < n_qubits; ++q) out = tensor_product(out, single);
  return out;
}

KrausChannel correlated_multi_pauli(int n_qubits,
                                    const std::vector<std::pair<PauliWord, double>>& weights) {
  if (weights.empty()) throw std::invalid_argument("correlated_multi_pauli: empty weight list");
  double total = 0.0;
  std::vector<Matrix> ops;
  ops.reserve(weights.size());
  for (const auto& [word, q] : weights) {
    if (word.size() != n_qubits)
      throw std::invalid_argument("correlated_multi_pauli: word length mismatch");
    check_rate(q, "correlated_multi_pauli");
    total += q;
    ops.push_back(std::sqrt(q) * matrix_of(word));
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("correlated_multi_pauli: weights must sum to 1");
  return KrausChannel{n_qubits, std::move(ops)};
}

KrausChannel synchronized_channel(int n_qubits, double q, Pauli letter) {
  check_rate(q, "synchronized_channel");
  PauliWord all{std::vector<Pauli>(n_qubits, letter)};
  return correlated_multi_pauli(n_qubits,
                                {{PauliWord::identity(n_qubits), 1.0 - q}, {all, q}});
}

KrausChannel povm_channel(int n_qubits, const std::vector<Matrix>& effects) {
  if (effects.empty()) throw std::invalid_argument("povm_channel: empty effect list");
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  Matrix sum = Matrix::Zero(d, d);
  std::vector<Matrix> ops;
  ops.reserve(effects.size());
  for (const auto& f : effects) {
    if (f.rows() != d || f.cols() != d)
      throw std::invalid_argument("povm_channel: effect dimension mismatch");
    if (hermiticity_error(f) > 1e-9)
      throw std::invalid_argument("povm_channel: effect not Hermitian");
    sum += f;
    Eigen::SelfAdjointEigenSolver<Matrix> es(f);
    if (es.eigenvalues().minCoeff() < -1e-9)
      throw std::invalid_argument("povm_channel: effect not positive semidefinite");
    Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
    ops.push_back(es.eigenvectors() * lam.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint());
  }
  if (max_abs(sum - Matrix::Identity(d, d)) > 1e-8)
    throw std::invalid_argument("povm_channel: effects do not sum to identity");
  return KrausChannel{n_qubits, std::move(ops)};
}

KrausChannel unitary_channel(const UnitaryMatrix& u) { return KrausChannel{u.n_qubits, {u.data}}; }

KrausChannel conjugate_channel(const UnitaryMatrix& u, const KrausChannel& e) {
  if (u.dim() != e.dim()) throw std::invalid_argument("conjugate_channel: dimension mismatch");
  std::vector<Matrix> ops;
  ops.reserve(e.kraus.size());
  for (const auto& a : e.kraus) ops.push_back(u.data * a * u.data.adjoint());
  return KrausChannel{e.n_qubits, std::move(ops)};
}

KrausChannel tensor_product(const KrausChannel& a, const KrausChannel& b) {
  std::vector<Matrix> ops;
  ops.reserve(a.kraus.size() * b.kraus.size());
  for (const auto& ka : a.kraus)
    for (const auto& kb : b.kraus) ops.push_back(kron(ka, kb));
  return KrausChannel{a.n_qubits + b.n_qubits, std::move(ops)};
}

KrausChannel mix_channels(const std::vector<std::pair<double, KrausChannel>>& parts) {
  if (parts.empty()) throw std::invalid_argument("mix_channels: empty mixture");
  std::vector<Matrix> ops;
  const int n = parts.front().second.n_qubits;
  for (const auto& [c, e] : parts) {
    if (e.n_qubits != n) throw std::invalid_argument("mix_channels: qubit count mismatch");
    if (c < 0.0) throw std::invalid_argument("mix_channels: negative weight");
    if (c == 0.0) continue;
    const double s = std::sqrt(c);
    for (const auto& a : e.kraus) ops.push_back(s * a);
  }
  if (ops.empty()) throw std::invalid_argument("mix_channels: all weights zero");
  return KrausChannel{n, std::move(ops)};
}

namespace {

nlohmann::json syndrome_entries(const std::vector<double>& p, int n_qubits, bool rich) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t idx = 0; idx < p.size(); ++idx) {
    if (p[idx] == 0.0) continue;
    nlohmann::json e;
    if (rich) {
      e["word"] = PauliWord::from_index(idx, n_qubits).str();
    } else {
      std::string bits(n_qubits, '0');
      for (int q = 0; q < n_qubits; ++q)
        if (idx & (std::size_t{1} << (n_qubits - 1 - q))) bits[q] = '1';
      e["bits"] = bits;
    }
    e["p"] = p[idx];
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace

std::string RichSyndrome::to_json() const {
  nlohmann::json j;
  j["n"] = n_qubits;
  j["entries"] = syndrome_entries(p, n_qubits, true);
  return j.dump();
}

RichSyndrome RichSyndrome::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  RichSyndrome r;
  r.n_qubits = j.at("n").get<int>();
  r.p.assign(std::size_t{1} << (2 * r.n_qubits), 0.0);
  for (const auto& e : j.at("entries")) {
    const PauliWord w = PauliWord::from_string(e.at("word").get<std::string>());
    if (w.size() != r.n_qubits) throw std::invalid_argument("RichSyndrome: word length mismatch");
    r.p[w.index()] = e.at("p").get<double>();
  }
  return r;
}

std::string CoarseSyndrome::to_json() const {
  nlohmann::json j;
  j["n"] = n_qubits;
  j["entries"] = syndrome_entries(p, n_qubits, false);
  return j.dump();
}

CoarseSyndrome CoarseSyndrome::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  CoarseSyndrome d;
  d.n_qubits = j.at("n").get<int>();
  d.p.assign(dim_of(d.n_qubits), 0.0);
  for (const auto& e : j.at("entries")) {
    const std::string bits = e.at("bits").get<std::string>();
    if (static_cast<int>(bits.size()) != d.n_qubits)
      throw std::invalid_argument("CoarseSyndrome: bitstring length mismatch");
    std::size_t idx = 0;
    for (char c : bits) idx = (idx << 1) | (c == '1' ? 1u : 0u);
    d.p[idx] = e.at("p").get<double>();
  }
  return d;
}

}  // namespace qcorr
