#include "iasm/pivots.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include "iasm/errors.hpp"

namespace iasm {

namespace {

std::string cell_text(const Pivot& p) { return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")"; }

std::int32_t max_index(std::span<const Pivot> points) {
  std::int32_t top = 0;
  for (const Pivot& p : points) top = std::max({top, p.row, p.col});
  return top;
}

}  // namespace

std::string_view kind_name(MatrixKind kind) { return kind == MatrixKind::Ssam ? "SSAM" : "PSAM"; }

MatrixKind parse_kind(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "SSAM") return MatrixKind::Ssam;
  if (upper == "PSAM") return MatrixKind::Psam;
  throw UsageError("unknown matrix kind '" + std::string(text) + "' (expected SSAM or PSAM)");
}

std::vector<Pivot> PivotSet::canonical() const {
  std::vector<Pivot> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

bool same_pivots(const PivotSet& a, const PivotSet& b) {
  return a.kind == b.kind && a.n == b.n && a.m == b.m && a.canonical() == b.canonical();
}

void validate_pivots(const PivotSet& p) {
  const std::int32_t max_col = p.kind == MatrixKind::Ssam ? p.n : p.m;
  const std::int32_t min_col = p.kind == MatrixKind::Ssam ? 1 : 0;
  for (const Pivot& q : p.points) {
    if (q.row < 1 || q.row > p.n || q.col < min_col || q.col > max_col) {
      throw StructuralError("pivot " + cell_text(q) + " outside the density range of a " + std::string(kind_name(p.kind)) +
                            " with n=" + std::to_string(p.n) + " m=" + std::to_string(p.m));
    }
  }
  ScratchArray z(static_cast<std::size_t>(std::max(p.n, p.m)) + 2);
  detail::check_unique_lines(p.points, z, "pivot set");
}

std::int32_t score_ssam(const PivotSet& p, std::int32_t i, std::int32_t j) {
  if (p.kind != MatrixKind::Ssam) throw UsageError("score_ssam needs an SSAM pivot set");
  if (i < 0 || j < 0 || i > p.n || j > p.n) {
    throw UsageError("SSAM index (" + std::to_string(i) + "," + std::to_string(j) + ") outside [0:" + std::to_string(p.n) +
                     "]x[0:" + std::to_string(p.n) + "]");
  }
  if (i > j) return j - i;
  std::int32_t dominated = 0;
  for (const Pivot& q : p.points) {
    if (q.row > i && q.row <= j && q.col <= j) ++dominated;
  }
  return (j - i) - dominated;
}

std::int32_t score_psam(const PivotSet& p, std::int32_t i, std::int32_t j) {
  if (p.kind != MatrixKind::Psam) throw UsageError("score_psam needs a PSAM pivot set");
  if (i < 0 || j < 0 || i > p.n || j > p.m) {
    throw UsageError("PSAM index (" + std::to_string(i) + "," + std::to_string(j) + ") outside [0:" + std::to_string(p.n) +
                     "]x[0:" + std::to_string(p.m) + "]");
  }
  std::int32_t dominated = 0;
  for (const Pivot& q : p.points) {
    if (q.row > i && q.col <= j) ++dominated;
  }
  return dominated;
}

std::vector<Pivot> cluster_blocks(std::span<const Pivot> points, Axis axis, ScratchArray& z) {
  const auto key = [axis](const Pivot& p) { return axis == Axis::Row ? p.row : p.col; };
  const auto other = [axis](const Pivot& p) { return axis == Axis::Row ? p.col : p.row; };
  const auto make = [axis](std::int32_t k, std::int32_t o) { return axis == Axis::Row ? Pivot{k, o} : Pivot{o, k}; };

  z.ensure(static_cast<std::size_t>(max_index(points)) + 2);

  // z[key] = other + 1, so an occupied cell is never zero (columns may be 0).
  for (std::size_t t = 0; t < points.size(); ++t) {
    const Pivot& p = points[t];
    if (z[key(p)] != 0) {
      const Pivot clash = p;
      for (std::size_t u = 0; u < t; ++u) z[key(points[u])] = 0;
      throw StructuralError("cluster_blocks: two pivots share " + std::string(axis == Axis::Row ? "row " : "column ") +
                            std::to_string(key(clash)));
    }
    z[key(p)] = other(p) + 1;
  }

  std::vector<Pivot> out;
  out.reserve(points.size());
  for (const Pivot& p : points) {
    if (z[key(p)] == 0) continue;  // already emitted with its block
    std::int32_t top = key(p);
    while (z[top + 1] != 0) ++top;
    for (std::int32_t k = top; k >= 0 && z[k] != 0; --k) {
      out.push_back(make(k, z[k] - 1));
      z[k] = 0;
    }
  }
  return out;
}

PivotSet cluster_blocks(const PivotSet& p, Axis axis, ScratchArray& z) {
  PivotSet out = p;
  out.points = cluster_blocks(p.points, axis, z);
  out.order = axis == Axis::Row ? PivotOrder::RowBlocks : PivotOrder::ColumnBlocks;
  return out;
}

namespace detail {

std::vector<Pivot> drop_removals(std::span<const Pivot> base, std::span<const Pivot> removals, ScratchArray& z) {
  z.ensure(static_cast<std::size_t>(std::max(max_index(base), max_index(removals))) + 2);

  auto clear = [&] {
    for (const Pivot& r : removals) z[r.row] = 0;
  };
  for (std::size_t t = 0; t < removals.size(); ++t) {
    const Pivot& r = removals[t];
    if (r.row < 0 || r.col < 0 || z[r.row] != 0) {
      for (std::size_t u = 0; u < t; ++u) z[removals[u].row] = 0;
      throw StructuralError("delta removes two pivots in row " + std::to_string(r.row));
    }
    z[r.row] = r.col + 1;
  }

  std::vector<Pivot> kept;
  kept.reserve(base.size());
  for (const Pivot& p : base) {
    if (p.row >= 0 && z[p.row] == p.col + 1) {
      z[p.row] = -(p.col + 1);  // consumed
    } else {
      kept.push_back(p);
    }
  }
  for (const Pivot& r : removals) {
    if (z[r.row] != -(r.col + 1)) {
      clear();
      throw StructuralError("delta removes " + cell_text(r) + ", which is not a pivot");
    }
  }
  clear();
  return kept;
}

void check_unique_lines(std::span<const Pivot> points, ScratchArray& z, std::string_view context) {
  z.ensure(static_cast<std::size_t>(max_index(points)) + 2);
  for (int pass = 0; pass < 2; ++pass) {
    const auto line = [pass](const Pivot& p) { return pass == 0 ? p.row : p.col; };
    std::size_t bad = points.size();
    for (std::size_t t = 0; t < points.size(); ++t) {
      const std::int32_t k = line(points[t]);
      if (k < 0) {
        bad = t;
        break;
      }
      if (z[k] != 0) {
        bad = t;
        break;
      }
      z[k] = 1;
    }
    for (std::size_t t = 0; t < std::min(bad, points.size()); ++t) z[line(points[t])] = 0;
    if (bad != points.size()) {
      throw StructuralError(std::string(context) + ": pivot " + cell_text(points[bad]) + " shares its " +
                            (pass == 0 ? "row" : "column") + " with another pivot");
    }
  }
}

[[noreturn]] void throw_unsorted_additions() {
  throw StructuralError("ordered delta: additions are not sorted in the list order");
}

}  // namespace detail

namespace {

void check_disjoint(const DeltaPivots& delta, ScratchArray& z) {
  z.ensure(static_cast<std::size_t>(std::max(max_index(delta.additions), max_index(delta.removals))) + 2);
  for (const Pivot& r : delta.removals) z[r.row] = r.col + 1;
  const Pivot* clash = nullptr;
  for (const Pivot& a : delta.additions) {
    if (a.row >= 0 && z[a.row] == a.col + 1) {
      clash = &a;
      break;
    }
  }
  for (const Pivot& r : delta.removals) z[r.row] = 0;
  if (clash != nullptr) throw StructuralError("delta both adds and removes " + cell_text(*clash));
}

}  // namespace

PivotSet apply_delta(const PivotSet& p, const DeltaPivots& delta, ScratchArray& z) {
  check_disjoint(delta, z);
  PivotSet out = p;
  out.points = detail::drop_removals(p.points, delta.removals, z);
  out.points.insert(out.points.end(), delta.additions.begin(), delta.additions.end());
  out.order = PivotOrder::Unordered;
  detail::check_unique_lines(out.points, z, "apply_delta");
  return out;
}

PivotSet apply_delta(const PivotSet& p, const DeltaPivots& delta) {
  ScratchArray z;
  return apply_delta(p, delta, z);
}

std::string dump_pivots(const PivotSet& p) {
  std::ostringstream out;
  out << kind_name(p.kind) << ' ' << p.n << ' ' << p.m << ' ' << p.points.size() << '\n';
  for (const Pivot& q : p.canonical()) out << q.row << ' ' << q.col << '\n';
  return out.str();
}

PivotSet parse_pivot_dump(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw UsageError("pivot dump: missing header line");
  std::istringstream header(line);
  std::string kind;
  long long n = -1;
  long long m = -1;
  long long count = -1;
  if (!(header >> kind >> n >> m >> count) || n < 0 || m < 0 || count < 0) {
    throw UsageError("pivot dump: bad header '" + line + "' (expected 'KIND n m count')");
  }
  PivotSet p;
  p.kind = parse_kind(kind);
  p.n = static_cast<std::int32_t>(n);
  p.m = static_cast<std::int32_t>(m);
  p.order = PivotOrder::RowSorted;
  p.points.reserve(static_cast<std::size_t>(count));
  for (long long t = 0; t < count; ++t) {
    if (!next_line()) throw UsageError("pivot dump: expected " + std::to_string(count) + " pivots, got " + std::to_string(t));
    std::istringstream row(line);
    Pivot q;
    if (!(row >> q.row >> q.col)) throw UsageError("pivot dump: bad pivot line '" + line + "'");
    p.points.push_back(q);
  }
  try {
    validate_pivots(p);
  } catch (const StructuralError& e) {
    throw UsageError(std::string("pivot dump: ") + e.what());
  }
  if (!std::is_sorted(p.points.begin(), p.points.end())) p.order = PivotOrder::Unordered;
  return p;
}

}  // namespace iasm
