#include "iasm/oracle.hpp"

#include <limits>

#include "iasm/errors.hpp"

namespace iasm::oracle {

namespace {

void check_cell_range(const Sequence& a, const Sequence& b) {
  // Cells lie in [-n, max(n, m)].
  constexpr auto kMax = static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max() / 2);
  if (a.str().size() > kMax || b.str().size() > kMax) throw UsageError("oracle: strings too long for 32-bit cells");
}

}  // namespace

ScoreMatrix::ScoreMatrix(MatrixKind kind, std::int32_t rows, std::int32_t cols)
    : kind_(kind),
      rows_(rows),
      cols_(cols),
      cells_(static_cast<std::size_t>(rows + 1) * static_cast<std::size_t>(cols + 1), 0) {}

DensityMatrix::DensityMatrix(MatrixKind kind, std::int32_t rows, std::int32_t cols)
    : kind_(kind), rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

std::int32_t lcs_length(const Sequence& a, const Sequence& b) {
  const std::int32_t m = a.length();
  std::vector<std::int32_t> prev(static_cast<std::size_t>(m) + 1, 0);
  std::vector<std::int32_t> cur(prev.size(), 0);
  for (std::int32_t i = 1; i <= b.length(); ++i) {
    for (std::int32_t j = 1; j <= m; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      cur[uj] = b[i] == a[j] ? prev[uj - 1] + 1 : std::max(prev[uj], cur[uj - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[static_cast<std::size_t>(m)];
}

ScoreMatrix oracle_ssam(const Sequence& a, const Sequence& b) {
  check_cell_range(a, b);
  const std::int32_t n = b.length();
  const std::int32_t m = a.length();
  ScoreMatrix k(MatrixKind::Ssam, n, n);
  std::vector<std::int32_t> prev(static_cast<std::size_t>(m) + 1);
  std::vector<std::int32_t> cur(prev.size());
  for (std::int32_t i = 0; i <= n; ++i) {
    for (std::int32_t j = 0; j < i; ++j) k(i, j) = j - i;
    // One LCS table per start i, extended one B symbol at a time.
    std::fill(prev.begin(), prev.end(), 0);
    k(i, i) = 0;
    for (std::int32_t j = i + 1; j <= n; ++j) {
      cur[0] = 0;
      for (std::int32_t t = 1; t <= m; ++t) {
        const auto ut = static_cast<std::size_t>(t);
        cur[ut] = b[j] == a[t] ? prev[ut - 1] + 1 : std::max(prev[ut], cur[ut - 1]);
      }
      std::swap(prev, cur);
      k(i, j) = prev[static_cast<std::size_t>(m)];
    }
  }
  return k;
}

ScoreMatrix oracle_psam(const Sequence& a, const Sequence& b) {
  check_cell_range(a, b);
  const std::int32_t n = b.length();
  const std::int32_t m = a.length();
  ScoreMatrix psi(MatrixKind::Psam, n, m);
  std::vector<std::int32_t> prev(static_cast<std::size_t>(m) + 1);
  std::vector<std::int32_t> cur(prev.size());
  for (std::int32_t i = 0; i <= n; ++i) {
    // Full (n-i+1) x (m+1) table for suffix B[i..n]; its last row is psi[i, *].
    std::fill(prev.begin(), prev.end(), 0);
    for (std::int32_t r = i + 1; r <= n; ++r) {
      cur[0] = 0;
      for (std::int32_t t = 1; t <= m; ++t) {
        const auto ut = static_cast<std::size_t>(t);
        cur[ut] = b[r] == a[t] ? prev[ut - 1] + 1 : std::max(prev[ut], cur[ut - 1]);
      }
      std::swap(prev, cur);
    }
    for (std::int32_t j = 0; j <= m; ++j) psi(i, j) = prev[static_cast<std::size_t>(j)];
  }
  return psi;
}

DensityMatrix density(const ScoreMatrix& m) {
  DensityMatrix d(m.kind(), m.rows(), m.cols());
  for (std::int32_t i = 1; i <= m.rows(); ++i) {
    for (std::int32_t j = 1; j <= m.cols(); ++j) {
      d(i, j) = (m(i, j) + m(i - 1, j - 1)) - (m(i - 1, j) + m(i, j - 1));
    }
  }
  return d;
}

ScoreMatrix reconstruct(const DensityMatrix& d, const ScoreMatrix& borders) {
  ScoreMatrix out(borders.kind(), d.rows(), d.cols());
  for (std::int32_t j = 0; j <= d.cols(); ++j) out(0, j) = borders(0, j);
  for (std::int32_t i = 0; i <= d.rows(); ++i) out(i, 0) = borders(i, 0);
  // Running 2-D prefix sum of the density.
  std::vector<std::int32_t> column_sums(static_cast<std::size_t>(d.cols()) + 1, 0);
  for (std::int32_t i = 1; i <= d.rows(); ++i) {
    std::int32_t row_prefix = 0;
    for (std::int32_t j = 1; j <= d.cols(); ++j) {
      row_prefix += d(i, j);
      column_sums[static_cast<std::size_t>(j)] += row_prefix;
      out(i, j) = column_sums[static_cast<std::size_t>(j)] - borders(0, 0) + borders(0, j) + borders(i, 0);
    }
  }
  return out;
}

std::optional<SubunitViolation> check_subunit(const DensityMatrix& d, int expected_sign) {
  std::vector<std::int32_t> col_seen(static_cast<std::size_t>(d.cols()) + 1, 0);
  for (std::int32_t i = 1; i <= d.rows(); ++i) {
    bool row_seen = false;
    for (std::int32_t j = 1; j <= d.cols(); ++j) {
      const std::int32_t v = d(i, j);
      if (v == 0) continue;
      if (v != expected_sign) {
        return SubunitViolation{i, j, "value " + std::to_string(v) + " where only " + std::to_string(expected_sign) + " is allowed"};
      }
      if (row_seen) return SubunitViolation{i, j, "second non-zero in row " + std::to_string(i)};
      if (col_seen[static_cast<std::size_t>(j)] != 0) {
        return SubunitViolation{i, j, "second non-zero in column " + std::to_string(j)};
      }
      row_seen = true;
      col_seen[static_cast<std::size_t>(j)] = 1;
    }
  }
  return std::nullopt;
}

PivotSet extract_pivots(const DensityMatrix& d, std::int32_t m) {
  if (auto bad = check_subunit(d, d.expected_sign())) {
    throw StructuralError("density is not sub-unit at (" + std::to_string(bad->row) + "," + std::to_string(bad->col) +
                          "): " + bad->reason);
  }
  PivotSet p;
  p.kind = d.kind();
  p.n = d.rows();
  p.m = m;
  p.order = PivotOrder::RowSorted;
  for (std::int32_t i = 1; i <= d.rows(); ++i) {
    for (std::int32_t j = 1; j <= d.cols(); ++j) {
      if (d(i, j) != 0) p.points.push_back({i, j});
    }
  }
  return p;
}

PivotSet ssam_pivots(const Sequence& a, const Sequence& b) { return extract_pivots(density(oracle_ssam(a, b)), a.length()); }

PivotSet psam_pivots(const Sequence& a, const Sequence& b) { return extract_pivots(density(oracle_psam(a, b)), a.length()); }

ScoreMatrix matrix_from_pivots(const PivotSet& p) {
  const std::int32_t cols = p.kind == MatrixKind::Ssam ? p.n : p.m;
  ScoreMatrix out(p.kind, p.n, cols);
  for (std::int32_t i = 0; i <= p.n; ++i) {
    for (std::int32_t j = 0; j <= cols; ++j) {
      out(i, j) = p.kind == MatrixKind::Ssam ? score_ssam(p, i, j) : score_psam(p, i, j);
    }
  }
  return out;
}

}  // namespace iasm::oracle
