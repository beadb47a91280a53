#pragma once

// Brute-force reference for every other module: dense dynamic programming,
// no shared ideas with the incremental path.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iasm/pivots.hpp"
#include "iasm/sequences.hpp"

namespace iasm::oracle {

/// Dense integer grid over [0:rows] x [0:cols].
class ScoreMatrix {
 public:
  ScoreMatrix(MatrixKind kind, std::int32_t rows, std::int32_t cols);

  MatrixKind kind() const { return kind_; }
  std::int32_t rows() const { return rows_; }
  std::int32_t cols() const { return cols_; }

  std::int32_t operator()(std::int32_t i, std::int32_t j) const { return cells_[index(i, j)]; }
  std::int32_t& operator()(std::int32_t i, std::int32_t j) { return cells_[index(i, j)]; }

  friend bool operator==(const ScoreMatrix&, const ScoreMatrix&) = default;

 private:
  std::size_t index(std::int32_t i, std::int32_t j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_ + 1) + static_cast<std::size_t>(j);
  }

  MatrixKind kind_;
  std::int32_t rows_;
  std::int32_t cols_;
  std::vector<std::int32_t> cells_;
};

/// Second differences of a ScoreMatrix over [1:rows] x [1:cols].
class DensityMatrix {
 public:
  DensityMatrix(MatrixKind kind, std::int32_t rows, std::int32_t cols);

  MatrixKind kind() const { return kind_; }
  /// +1 for SSAM, -1 for PSAM.
  int expected_sign() const { return kind_sign(kind_); }
  std::int32_t rows() const { return rows_; }
  std::int32_t cols() const { return cols_; }

  std::int32_t operator()(std::int32_t i, std::int32_t j) const { return cells_[index(i, j)]; }
  std::int32_t& operator()(std::int32_t i, std::int32_t j) { return cells_[index(i, j)]; }

 private:
  std::size_t index(std::int32_t i, std::int32_t j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j - 1);
  }

  MatrixKind kind_;
  std::int32_t rows_;
  std::int32_t cols_;
  std::vector<std::int32_t> cells_;
};

struct SubunitViolation {
  std::int32_t row;
  std::int32_t col;
  std::string reason;
};

std::int32_t lcs_length(const Sequence& a, const Sequence& b);

/// K[i,j] = LCS(B[i..j], A) for i <= j, j - i otherwise; [0:n] x [0:n].
ScoreMatrix oracle_ssam(const Sequence& a, const Sequence& b);

/// psi[i,j] = LCS(B[i..n], A[0..j]); [0:n] x [0:m].
ScoreMatrix oracle_psam(const Sequence& a, const Sequence& b);

DensityMatrix density(const ScoreMatrix& m);

/// Rebuilds a matrix from its density and its top row / left column.
ScoreMatrix reconstruct(const DensityMatrix& d, const ScoreMatrix& borders);

/// First cell breaking "at most one non-zero per row and column, all equal to
/// `expected_sign`", or nullopt.
std::optional<SubunitViolation> check_subunit(const DensityMatrix& d, int expected_sign);

/// Non-zero cells of `d` as a pivot set. Throws StructuralError when `d` is not
/// sub-unit. `m` is the length of A recorded in the set's bounds.
PivotSet extract_pivots(const DensityMatrix& d, std::int32_t m);

/// extract_pivots(density(oracle_*(A, B))).
PivotSet ssam_pivots(const Sequence& a, const Sequence& b);
PivotSet psam_pivots(const Sequence& a, const Sequence& b);

/// Dense matrix rebuilt cell by cell from a pivot set via score_ssam / score_psam.
ScoreMatrix matrix_from_pivots(const PivotSet& p);

}  // namespace iasm::oracle
