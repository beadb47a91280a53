#include "iasm/sequences.hpp"

#include <cassert>

#include "iasm/errors.hpp"

namespace iasm {

namespace {

constexpr std::int32_t kPlusInfRaw = MatchPos::plus_inf().raw();
constexpr std::int32_t kMinusInfRaw = MatchPos::minus_inf().raw();

std::string describe_symbol(Symbol c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x20 && u < 0x7f) return std::string("'") + c + "'";
  return "byte " + std::to_string(u);
}

}  // namespace

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  index_.fill(-1);
  if (symbols_.empty()) throw UsageError("alphabet must contain at least one symbol");
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    auto& slot = index_[static_cast<unsigned char>(symbols_[k])];
    if (slot >= 0) throw UsageError("alphabet lists " + describe_symbol(symbols_[k]) + " twice");
    slot = static_cast<std::int16_t>(k);
  }
}

Alphabet Alphabet::lowercase() { return Alphabet("abcdefghijklmnopqrstuvwxyz"); }

int Alphabet::index_of(Symbol c) const {
  const int k = index_[static_cast<unsigned char>(c)];
  if (k < 0) throw IngestionError("symbol " + describe_symbol(c) + " is not in the alphabet \"" + symbols_ + "\"");
  return k;
}

void Alphabet::validate(std::string_view text) const {
  for (Symbol c : text) index_of(c);
}

Symbol Sequence::at(std::int32_t pos) const {
  if (pos < 1 || pos > length()) {
    throw UsageError("position " + std::to_string(pos) + " outside 1.." + std::to_string(length()));
  }
  return (*this)[pos];
}

std::int32_t MatchPos::value() const {
  assert(finite());
  return raw_;
}

std::string MatchPos::to_string() const {
  if (is_plus_inf()) return "+INF";
  if (is_minus_inf()) return "-INF";
  return std::to_string(raw_);
}

MatchPos next_match(std::int32_t i, Symbol c, const Sequence& s) {
  if (i < 0 || i > s.length()) {
    throw UsageError("next_match position " + std::to_string(i) + " outside 0.." + std::to_string(s.length()));
  }
  for (std::int32_t k = i + 1; k <= s.length(); ++k) {
    if (s[k] == c) return MatchPos::at(k);
  }
  return MatchPos::plus_inf();
}

MatchPos prev_match(std::int32_t j, Symbol c, const Sequence& s) {
  if (j < 0 || j > s.length()) {
    throw UsageError("prev_match position " + std::to_string(j) + " outside 0.." + std::to_string(s.length()));
  }
  for (std::int32_t k = j; k >= 1; --k) {
    if (s[k] == c) return MatchPos::at(k);
  }
  return MatchPos::minus_inf();
}

// ---------------------------------------------------------------------------

StaticMatchTables::StaticMatchTables(const Sequence& s, const Alphabet& alphabet)
    : alphabet_(alphabet), length_(s.length()) {
  alphabet_.validate(s.str());
  const auto width = static_cast<std::size_t>(alphabet_.size());
  const auto rows = static_cast<std::size_t>(length_) + 1;
  next_.assign(rows * width, kPlusInfRaw);
  prev_.assign(rows * width, kMinusInfRaw);

  // Each (position, symbol) cell is written exactly once per table.
  for (std::int32_t i = length_ - 1; i >= 0; --i) {
    const auto row = static_cast<std::size_t>(i) * width;
    const auto below = row + width;
    for (std::size_t k = 0; k < width; ++k) next_[row + k] = next_[below + k];
    next_[row + static_cast<std::size_t>(alphabet_.index_of(s[i + 1]))] = i + 1;
  }
  for (std::int32_t j = 1; j <= length_; ++j) {
    const auto row = static_cast<std::size_t>(j) * width;
    const auto above = row - width;
    for (std::size_t k = 0; k < width; ++k) prev_[row + k] = prev_[above + k];
    prev_[row + static_cast<std::size_t>(alphabet_.index_of(s[j]))] = j;
  }
}

std::size_t StaticMatchTables::cell(std::int32_t pos, Symbol c) const {
  if (pos < 0 || pos > length_) {
    throw UsageError("match table position " + std::to_string(pos) + " outside 0.." + std::to_string(length_));
  }
  return static_cast<std::size_t>(pos) * static_cast<std::size_t>(alphabet_.size()) +
         static_cast<std::size_t>(alphabet_.index_of(c));
}

MatchPos StaticMatchTables::next_match(std::int32_t i, Symbol c) const { return MatchPos::from_raw(next_[cell(i, c)]); }

MatchPos StaticMatchTables::prev_match(std::int32_t j, Symbol c) const { return MatchPos::from_raw(prev_[cell(j, c)]); }

// ---------------------------------------------------------------------------

DynamicMatchTables::DynamicMatchTables(Alphabet alphabet)
    : alphabet_(std::move(alphabet)), width_(alphabet_.size()) {
  prev_.assign(static_cast<std::size_t>(width_), kMinusInfRaw);
  next_.assign(static_cast<std::size_t>(width_), kPlusInfRaw);
}

DynamicMatchTables::DynamicMatchTables(const Sequence& s, Alphabet alphabet) : DynamicMatchTables(std::move(alphabet)) {
  alphabet_.validate(s.str());
  prev_.reserve(static_cast<std::size_t>(s.length() + 1) * static_cast<std::size_t>(width_));
  next_.reserve(prev_.capacity());
  for (std::int32_t k = 1; k <= s.length(); ++k) append(s[k]);
}

void DynamicMatchTables::append(Symbol c) {
  const int sym = alphabet_.index_of(c);
  const std::int32_t n = length_;

  // Row n+1 of the prev table: row n with the appended symbol pointing at n+1.
  for (int k = 0; k < width_; ++k) prev_.push_back(prev_[cell(n, k)]);
  // Row n+1 of the next table is exact only for `c`, which has no later match.
  for (int k = 0; k < width_; ++k) next_.push_back(kPlusInfRaw);

  const std::int32_t last = prev_[cell(n, sym)];
  const std::int32_t anchor = last == kMinusInfRaw ? 0 : last;
  next_[cell(anchor, sym)] = n + 1;
  prev_[cell(n + 1, sym)] = n + 1;
  length_ = n + 1;
}

void DynamicMatchTables::check_position(std::int32_t pos) const {
  if (pos < 0 || pos > length_) {
    throw UsageError("match table position " + std::to_string(pos) + " outside 0.." + std::to_string(length_));
  }
}

MatchPos DynamicMatchTables::prev_match(std::int32_t j, Symbol c) const {
  check_position(j);
  return MatchPos::from_raw(prev_[cell(j, alphabet_.index_of(c))]);
}

MatchPos DynamicMatchTables::next_match(std::int32_t i, Symbol c) const {
  check_position(i);
  const int sym = alphabet_.index_of(c);
  const std::int32_t p = prev_[cell(i, sym)];
  return MatchPos::from_raw(next_[cell(p == kMinusInfRaw ? 0 : p, sym)]);
}

MatchPos DynamicMatchTables::prev_cell(std::int32_t row, Symbol c) const {
  check_position(row);
  return MatchPos::from_raw(prev_[cell(row, alphabet_.index_of(c))]);
}

MatchPos DynamicMatchTables::next_cell(std::int32_t row, Symbol c) const {
  check_position(row);
  return MatchPos::from_raw(next_[cell(row, alphabet_.index_of(c))]);
}

}  // namespace iasm
