#include "alphasim/tape.hpp"

#include <algorithm>

namespace alphasim {

char move_letter(Move m) {
  switch (m) {
    case Move::Left: return 'G';
    case Move::Right: return 'D';
    case Move::Stay: return 'N';
  }
  return '?';
}

std::optional<Move> move_from_letter(char c) {
  switch (c) {
    case 'G': case 'g': return Move::Left;
    case 'D': case 'd': return Move::Right;
    case 'N': case 'n': return Move::Stay;
    default: return std::nullopt;
  }
}

Alphabet::Alphabet(std::initializer_list<Symbol> symbols)
    : Alphabet(std::vector<Symbol>(symbols)) {}

Alphabet::Alphabet(std::vector<Symbol> symbols) {
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  if (symbols.empty()) throw AlphabetViolation("alphabet must be non-empty");
  symbols_.push_back(kBlank);
  for (Symbol s : symbols) {
    if (s != kBlank) symbols_.push_back(s);
  }
}

const Alphabet& Alphabet::binary() {
  static const Alphabet a{kBlank, kZero, kOne};
  return a;
}

bool Alphabet::contains(Symbol s) const {
  return index_of(s).has_value();
}

std::optional<std::size_t> Alphabet::index_of(Symbol s) const {
  if (s == kBlank) return 0;
  auto it = std::lower_bound(symbols_.begin() + 1, symbols_.end(), s);
  if (it != symbols_.end() && *it == s) {
    return std::size_t(it - symbols_.begin());
  }
  return std::nullopt;
}

Tape::Tape(Alphabet alphabet, Bound bound)
    : alphabet_(std::move(alphabet)), bound_(bound) {}

Tape Tape::from_literal(std::string_view text, Alphabet alphabet, Bound bound) {
  Tape t(std::move(alphabet), bound);
  std::int64_t pos = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    Symbol s;
    if (c == 0xCE && i + 1 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0x9B) {
      s = kBlank;  // UTF-8 'Λ'
      ++i;
    } else {
      s = Symbol(text[i]);
    }
    t.write(pos++, s);
  }
  return t;
}

bool Tape::in_range(std::int64_t pos) const {
  if (bound_ == Bound::LeftBounded && pos < 0) return false;
  if (bound_ == Bound::RightBounded && pos > 0) return false;
  return true;
}

Symbol Tape::read(std::int64_t pos) const {
  if (!in_range(pos)) {
    throw BoundaryViolation("read at position " + std::to_string(pos) +
                            " beyond the bounded tape end");
  }
  if (pos < origin_ || pos >= window_end()) return kBlank;
  return cells_[std::size_t(pos - origin_)];
}

void Tape::write(std::int64_t pos, Symbol s) {
  if (!in_range(pos)) {
    throw BoundaryViolation("write at position " + std::to_string(pos) +
                            " beyond the bounded tape end");
  }
  if (!alphabet_.contains(s)) {
    throw AlphabetViolation(std::string("symbol '") + s.ch +
                            "' is not in the tape alphabet");
  }
  ensure(pos);
  cells_[std::size_t(pos - origin_)] = s;
}

void Tape::ensure(std::int64_t pos) {
  if (cells_.empty()) {
    origin_ = pos;
    cells_.push_back(kBlank);
    return;
  }
  if (pos < origin_) {
    cells_.insert(cells_.begin(), std::size_t(origin_ - pos), kBlank);
    origin_ = pos;
  } else if (pos >= window_end()) {
    cells_.resize(std::size_t(pos - origin_ + 1), kBlank);
  }
}

std::string Tape::render(std::int64_t from, std::int64_t to,
                         char blank_as) const {
  std::string out;
  for (std::int64_t p = from; p < to; ++p) {
    Symbol s = in_range(p) ? read(p) : kBlank;
    out.push_back(s == kBlank ? blank_as : s.ch);
  }
  return out;
}

std::string Tape::word_from(std::int64_t start) const {
  std::string out;
  for (std::int64_t p = start; p < window_end(); ++p) {
    Symbol s = read(p);
    if (s == kBlank) break;
    out.push_back(s.ch);
  }
  return out;
}

void Tape::store_word(std::int64_t start, std::string_view word) {
  std::int64_t p = start;
  for (char c : word) write(p++, Symbol(c));
  // blank out any tail left over from a longer previous word
  while (p < window_end() && read(p) != kBlank) write(p++, kBlank);
}

bool operator==(const Tape& a, const Tape& b) {
  if (a.bound_ != b.bound_ || !(a.alphabet_ == b.alphabet_)) return false;
  std::int64_t lo = std::min(a.window_begin(), b.window_begin());
  std::int64_t hi = std::max(a.window_end(), b.window_end());
  for (std::int64_t p = lo; p < hi; ++p) {
    Symbol sa = a.in_range(p) ? a.read(p) : kBlank;
    Symbol sb = b.in_range(p) ? b.read(p) : kBlank;
    if (sa != sb) return false;
  }
  return true;
}

Head::Head(std::int64_t pos, Discipline d, bool stagnate)
    : position(pos), discipline(d), may_stagnate(stagnate) {
  if (forward_only() && may_stagnate) {
    throw DisciplineViolation("forward-only heads may not stagnate");
  }
}

std::optional<Symbol> head_apply(Tape& tape, Head& head,
                                 const HeadAction& action) {
  switch (action.kind) {
    case HeadAction::Kind::Read: {
      if (!head.can_read()) {
        throw DisciplineViolation("read through a write-only head");
      }
      return tape.read(head.position);
    }
    case HeadAction::Kind::Write: {
      if (!head.can_write()) {
        throw DisciplineViolation("write through a read-only head");
      }
      tape.write(head.position, action.symbol);
      return std::nullopt;
    }
    case HeadAction::Kind::Move: {
      std::int64_t delta = 0;
      switch (action.move) {
        case Move::Left:
          if (head.forward_only()) {
            throw DisciplineViolation(
                "left move on a forward-only head");
          }
          delta = -1;
          break;
        case Move::Right:
          delta = 1;
          break;
        case Move::Stay:
          if (!head.may_stagnate) {
            throw DisciplineViolation("stagnation on a never-stagnating head");
          }
          return std::nullopt;
      }
      std::int64_t target = head.position + delta;
      if (!tape.in_range(target)) {
        throw BoundaryViolation("move past the bounded tape end to position " +
                                std::to_string(target));
      }
      head.position = target;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace alphasim
