#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace iasm {

using Symbol = char;

/// Ordered finite symbol set. Fixed for the lifetime of any state built on it.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);

  /// ASCII lowercase a-z.
  static Alphabet lowercase();

  int size() const { return static_cast<int>(symbols_.size()); }
  bool contains(Symbol c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
  /// Dense index in [0, size). Throws IngestionError for foreign symbols.
  int index_of(Symbol c) const;
  Symbol at(int index) const { return symbols_[static_cast<std::size_t>(index)]; }
  const std::string& symbols() const { return symbols_; }

  /// Throws IngestionError naming the first symbol of `text` not in the set.
  void validate(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

/// String with 1-based positions. S[i..j] is positions i+1..j.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::string text) : text_(std::move(text)) {}

  std::int32_t length() const { return static_cast<std::int32_t>(text_.size()); }
  bool empty() const { return text_.empty(); }
  /// 1-based access, 1 <= pos <= length().
  Symbol operator[](std::int32_t pos) const { return text_[static_cast<std::size_t>(pos - 1)]; }
  /// Checked 1-based access.
  Symbol at(std::int32_t pos) const;

  void append(Symbol c) { text_.push_back(c); }
  void prepend(Symbol c) { text_.insert(text_.begin(), c); }

  const std::string& str() const { return text_; }
  Sequence reversed() const { return Sequence(std::string(text_.rbegin(), text_.rend())); }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::string text_;
};

/// A NextMatch / PrevMatch result: a position, +INF or -INF. The sentinels are
/// out of band and carry no arithmetic.
class MatchPos {
 public:
  static constexpr MatchPos plus_inf() { return MatchPos(kPlusInf); }
  static constexpr MatchPos minus_inf() { return MatchPos(kMinusInf); }
  static constexpr MatchPos at(std::int32_t pos) { return MatchPos(pos); }

  constexpr bool finite() const { return raw_ != kPlusInf && raw_ != kMinusInf; }
  constexpr bool is_plus_inf() const { return raw_ == kPlusInf; }
  constexpr bool is_minus_inf() const { return raw_ == kMinusInf; }
  /// Only valid when finite().
  std::int32_t value() const;
  /// Finite value, or `fallback` for either sentinel.
  constexpr std::int32_t value_or(std::int32_t fallback) const { return finite() ? raw_ : fallback; }

  constexpr std::int32_t raw() const { return raw_; }
  static constexpr MatchPos from_raw(std::int32_t raw) { return MatchPos(raw); }

  friend constexpr bool operator==(MatchPos, MatchPos) = default;

  std::string to_string() const;

 private:
  static constexpr std::int32_t kPlusInf = std::numeric_limits<std::int32_t>::max();
  static constexpr std::int32_t kMinusInf = std::numeric_limits<std::int32_t>::min();

  constexpr explicit MatchPos(std::int32_t raw) : raw_(raw) {}
  std::int32_t raw_;
};

/// min i' > i with S[i'] = c, else +INF. Linear scan; 0 <= i <= |S|.
MatchPos next_match(std::int32_t i, Symbol c, const Sequence& s);
/// max j' <= j with S[j'] = c, else -INF. Linear scan; 0 <= j <= |S|.
MatchPos prev_match(std::int32_t j, Symbol c, const Sequence& s);

/// Anything answering NextMatch / PrevMatch over a string of known length.
template <typename T>
concept MatchSource = requires(const T& t, std::int32_t i, Symbol c) {
  { t.length() } -> std::convertible_to<std::int32_t>;
  { t.next_match(i, c) } -> std::same_as<MatchPos>;
  { t.prev_match(i, c) } -> std::same_as<MatchPos>;
};

/// Precomputed NextMatch / PrevMatch for every (position, symbol). Immutable.
class StaticMatchTables {
 public:
  StaticMatchTables(const Sequence& s, const Alphabet& alphabet);

  std::int32_t length() const { return length_; }
  const Alphabet& alphabet() const { return alphabet_; }
  MatchPos next_match(std::int32_t i, Symbol c) const;
  MatchPos prev_match(std::int32_t j, Symbol c) const;

 private:
  std::size_t cell(std::int32_t pos, Symbol c) const;

  Alphabet alphabet_;
  std::int32_t length_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> prev_;
};

/// Append-only NextMatch / PrevMatch tables with O(|alphabet|) appends.
///
/// The prev table is exact at every row. The next table is exact only at row 0
/// and at rows i with S[i] = c; other cells hold stale values. A NextMatch query
/// reads the next table at max(0, PrevMatch(i, c)), which is always an exact
/// cell.
class DynamicMatchTables {
 public:
  explicit DynamicMatchTables(Alphabet alphabet);
  DynamicMatchTables(const Sequence& s, Alphabet alphabet);

  std::int32_t length() const { return length_; }
  const Alphabet& alphabet() const { return alphabet_; }

  void append(Symbol c);

  MatchPos next_match(std::int32_t i, Symbol c) const;
  MatchPos prev_match(std::int32_t j, Symbol c) const;

  /// Raw stored cells, for tests of the update rule.
  MatchPos prev_cell(std::int32_t row, Symbol c) const;
  MatchPos next_cell(std::int32_t row, Symbol c) const;

 private:
  std::size_t cell(std::int32_t row, int sym) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(sym);
  }
  void check_position(std::int32_t pos) const;

  Alphabet alphabet_;
  int width_;
  std::int32_t length_ = 0;
  std::vector<std::int32_t> prev_;
  std::vector<std::int32_t> next_;
};

/// NextMatch / PrevMatch over rev(S), answered from tables over S.
///
/// Position t of rev(S) is position |S| - t + 1 of S, so
///   next_rev(i) = |S| - prev(|S| - i) + 1 and prev_rev(j) = |S| - next(|S| - j) + 1.
template <MatchSource Forward>
class ReversedMatchView {
 public:
  explicit ReversedMatchView(const Forward& forward) : forward_(&forward) {}

  std::int32_t length() const { return forward_->length(); }

  MatchPos next_match(std::int32_t i, Symbol c) const {
    const MatchPos p = forward_->prev_match(length() - i, c);
    return p.finite() ? MatchPos::at(length() - p.value() + 1) : MatchPos::plus_inf();
  }
  MatchPos prev_match(std::int32_t j, Symbol c) const {
    const MatchPos p = forward_->next_match(length() - j, c);
    return p.finite() ? MatchPos::at(length() - p.value() + 1) : MatchPos::minus_inf();
  }

 private:
  const Forward* forward_;
};

}  // namespace iasm
