#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphasim/errors.hpp"

namespace alphasim {

/// Movement alphabet {G, D, N}: shift left, shift right, stay put.
enum class Move : std::uint8_t { Left, Right, Stay };

char move_letter(Move m);
std::optional<Move> move_from_letter(char c);

/// One cell symbol. The blank is spelled '_' internally; tape literals also
/// accept the UTF-8 letter Λ for it.
struct Symbol {
  char ch{'_'};
  constexpr Symbol() = default;
  constexpr explicit Symbol(char c) : ch(c) {}
  friend constexpr bool operator==(Symbol, Symbol) = default;
  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

inline constexpr Symbol kBlank{'_'};
inline constexpr Symbol kZero{'0'};
inline constexpr Symbol kOne{'1'};

/// Finite, non-empty symbol set that always contains the blank.
class Alphabet {
 public:
  Alphabet(std::initializer_list<Symbol> symbols);
  explicit Alphabet(std::vector<Symbol> symbols);

  /// {Λ, 0, 1} — the alphabet of program/work/result tapes.
  static const Alphabet& binary();

  bool contains(Symbol s) const;
  std::size_t size() const { return symbols_.size(); }

  /// Canonical order: blank first, the rest sorted. Index 0 is always Λ.
  const std::vector<Symbol>& canonical() const { return symbols_; }
  std::optional<std::size_t> index_of(Symbol s) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Symbol> symbols_;  // blank first, rest ascending
};

enum class Bound : std::uint8_t { Unbounded, LeftBounded, RightBounded };

/// A tape: logically unbounded in its permitted directions, materialized as
/// a finite window that grows on demand. Reads outside the window observe Λ.
class Tape {
 public:
  explicit Tape(Alphabet alphabet, Bound bound = Bound::Unbounded);

  /// Builds a tape whose window holds `text` at indices 0..len-1. Both '_'
  /// and 'Λ' denote the blank.
  static Tape from_literal(std::string_view text, Alphabet alphabet,
                           Bound bound = Bound::Unbounded);

  const Alphabet& alphabet() const { return alphabet_; }
  Bound bound() const { return bound_; }

  /// True iff pos lies on an existing side of the tape.
  bool in_range(std::int64_t pos) const;

  Symbol read(std::int64_t pos) const;
  void write(std::int64_t pos, Symbol s);

  std::int64_t window_begin() const { return origin_; }
  std::int64_t window_end() const {
    return origin_ + std::int64_t(cells_.size());
  }

  /// Window content as text, blanks spelled with `blank_as`.
  std::string render(std::int64_t from, std::int64_t to,
                     char blank_as = '_') const;

  /// The contiguous non-blank run starting at `start` (used to read tapes
  /// as words).
  std::string word_from(std::int64_t start = 0) const;

  /// Replaces the cells from `start` with `word` followed by a blank
  /// terminator (word-model edits shift content; see context module).
  void store_word(std::int64_t start, std::string_view word);

  friend bool operator==(const Tape&, const Tape&);

 private:
  void ensure(std::int64_t pos);

  Alphabet alphabet_;
  Bound bound_;
  std::vector<Symbol> cells_;
  std::int64_t origin_{0};
};

/// Head access disciplines, in the paper's four flavors: the program reader
/// (forward, read-only), the result writer (forward, write-only), the work
/// head (both ways, read/write), and the program writer (both ways,
/// write-only).
enum class Discipline : std::uint8_t {
  ReadForwardOnly,
  WriteForwardOnly,
  ReadWriteBidirectional,
  WriteBidirectional,
};

struct Head {
  std::int64_t position{0};
  Discipline discipline{Discipline::ReadWriteBidirectional};
  bool may_stagnate{true};

  Head() = default;
  Head(std::int64_t pos, Discipline d, bool stagnate);

  bool can_read() const {
    return discipline == Discipline::ReadForwardOnly ||
           discipline == Discipline::ReadWriteBidirectional;
  }
  bool can_write() const { return discipline != Discipline::ReadForwardOnly; }
  bool forward_only() const {
    return discipline == Discipline::ReadForwardOnly ||
           discipline == Discipline::WriteForwardOnly;
  }
};

struct HeadAction {
  enum class Kind : std::uint8_t { Read, Write, Move } kind{Kind::Read};
  Symbol symbol{};
  Move move{Move::Stay};

  static HeadAction read() { return {Kind::Read, {}, Move::Stay}; }
  static HeadAction write(Symbol s) { return {Kind::Write, s, Move::Stay}; }
  static HeadAction move_head(Move m) { return {Kind::Move, {}, m}; }
};

/// Applies exactly one action under the head's discipline. Returns the
/// observed symbol for reads. Discipline or boundary violations throw and
/// leave tape and head untouched; they never silently succeed.
std::optional<Symbol> head_apply(Tape& tape, Head& head,
                                 const HeadAction& action);

}  // namespace alphasim
