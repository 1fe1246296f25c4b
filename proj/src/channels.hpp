/*
 * This code is part of qcorr.
 *
 * Licensed under the Apache License, Version 2.0. You may obtain a copy
 * of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QCORR_CHANNELS_HPP
#define QCORR_CHANNELS_HPP

#include <string>
#include <utility>
#include <vector>

#include "qmath.hpp"

namespace qcorr {

// Completely positive map in Kraus form, rho -> sum_k A_k rho A_k^dagger.
struct KrausChannel {
  int n_qubits = 0;
  std::vector<Matrix> kraus;

  Eigen::Index dim() const { return kraus.empty() ? 0 : kraus.front().rows(); }

  static KrausChannel from_kraus(int n_qubits, std::vector<Matrix> ops);
  static KrausChannel identity(int n_qubits);
};

DensityMatrix apply_channel(const KrausChannel& e, const DensityMatrix& rho);

struct CptpReport {
  double completeness_deviation = 0.0;  // ||sum A^dag A - 1||_max
  double tolerance = 0.0;
  bool pass = false;
};
CptpReport verify_cptp(const KrausChannel& e, double tol = 1e-10);

// Pauli-twirl probabilities p_w = sum_k |tr(P_w A_k)|^2 / 4^n, stored dense
// over base-4 word indices. Sums to 1 for trace-preserving channels.
struct RichSyndrome {
  int n_qubits = 0;
  std::vector<double> p;  // size 4^n

  double at(const PauliWord& w) const { return p[w.index()]; }
  double total() const;
  std::string to_json() const;
  static RichSyndrome from_json(const std::string& text);
};

// Push-forward of the rich syndrome under I -> 0, {X,Y,Z} -> 1.
struct CoarseSyndrome {
  int n_qubits = 0;
  std::vector<double> p;  // size 2^n, bit i of the index is qubit i fault (qubit 0 = MSB)

  double total() const;
  std::string to_json() const;
  static CoarseSyndrome from_json(const std::string& text);
};

// f(s) = P(exactly s qubits faulty); alpha = sum_s f(s) * s.
struct WeightProfile {
  std::vector<double> f;  // length n+1
  double alpha = 0.0;
};

// All tr(P_w A) for a 2^n x 2^n matrix, indexed by PauliWord::index().
// O(n 4^n) via per-qubit butterflies.
std::vector<Complex> pauli_coefficients(const Matrix& a);

RichSyndrome chi_diagonal(const KrausChannel& e);
CoarseSyndrome coarse_syndrome(const RichSyndrome& r);
WeightProfile weight_profile(const RichSyndrome& r);

// Marginal fault probability per qubit.
std::vector<double> qubit_fault_rates(const CoarseSyndrome& d);

enum class CorrelationMode { pearson, covariance };

// Correlation between the events "qubit i faulty" and "qubit j faulty".
// Throws std::domain_error for a degenerate marginal in pearson mode.
double pair_correlation(const CoarseSyndrome& d, int i, int j, CorrelationMode mode);

// Noise constructors (all trace preserving).
KrausChannel depolarizing_channel(int n_qubits, double p);
KrausChannel dephasing_channel(int n_qubits, double p);
KrausChannel correlated_multi_pauli(int n_qubits,
                                    const std::vector<std::pair<PauliWord, double>>& weights);
// All qubits hit together with probability q.
KrausChannel synchronized_channel(int n_qubits, double q, Pauli letter = Pauli::X);
// Ingests POVM effects {F_k}; Kraus operators are the principal square roots.
KrausChannel povm_channel(int n_qubits, const std::vector<Matrix>& effects);
KrausChannel unitary_channel(const UnitaryMatrix& u);

KrausChannel conjugate_channel(const UnitaryMatrix& u, const KrausChannel& e);
KrausChannel tensor_product(const KrausChannel& a, const KrausChannel& b);

// Convex mixture sum_i c_i E_i as a channel (Kraus union with sqrt(c) scaling).
KrausChannel mix_channels(const std::vector<std::pair<double, KrausChannel>>& parts);

}  // namespace qcorr

#endif
