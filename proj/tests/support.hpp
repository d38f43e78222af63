#pragma once

// Shared fixtures for the unit tests: a few registers, address windows and a
// dense-matrix model of words built with Eigen.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "embz/parser.hpp"
#include "embz/pauli.hpp"

namespace embz::test {

using cd = std::complex<double>;
using Mat = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic>;

inline RegisterHandle reg_from_ratios(std::initializer_list<long> r) {
  std::vector<Rational> v;
  for (long x : r) v.push_back(Rational(x));
  return catalyst_register(SchmidtVector::from_ratios(v));
}

inline RegisterHandle bell() { return reg_from_ratios({1, 1}); }

/// Both parties, sites lo..hi, all lanes, plus the given slots (lanes < slot_width).
inline std::vector<QubitAddress> make_window(const RegisterHandle& reg, std::int64_t lo, std::int64_t hi,
                                             std::vector<unsigned> slots = {}, unsigned slot_width = 1) {
  std::vector<QubitAddress> out;
  for (Party p : {Party::Alice, Party::Bob}) {
    for (std::int64_t s = lo; s <= hi; ++s) {
      for (unsigned l = 0; l < reg->width(); ++l) out.push_back(catalyst_address(p, reg, s, l));
    }
    for (unsigned slot : slots) {
      for (unsigned l = 0; l < slot_width; ++l) out.push_back(ancilla_address(p, ancilla_register(slot), l));
    }
  }
  return out;
}

inline Mat letter_matrix(PauliLetter l) {
  Mat x(2, 2), z(2, 2), id = Mat::Identity(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  return (l.x ? x : id) * (l.z ? z : id);
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

/// Word as a matrix on `qubits` (first address = most significant factor).
inline Mat word_matrix(const PauliWord& w, const std::vector<QubitAddress>& qubits) {
  Mat m = Mat::Identity(1, 1);
  for (const auto& q : qubits) m = kron(m, letter_matrix(w.letter_at(q)));
  return m;
}

inline cd approx(const RadicalScalar& a) {
  ScalarApprox f = scalar_to_float(a, 17);
  return {f.real(), f.imag()};
}

inline Mat element_matrix(const AlgebraElement& a, const std::vector<QubitAddress>& qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits.size();
  Mat m = Mat::Zero(dim, dim);
  for (const auto& [w, c] : a.terms()) m += approx(c) * word_matrix(w, qubits);
  return m;
}

}  // namespace embz::test
