#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braidinv/braid.hpp"

namespace braidinv {

enum class MoveKind { exchange, relation, rotate, free_reduce, destabilize };

// One primitive move; `first`/`second` are positions for exchange, the
// position for relation, and the shift for rotate.
struct PrimitiveMove {
  MoveKind kind = MoveKind::free_reduce;
  long first = 0;
  long second = 0;

  static PrimitiveMove exchange(long p, long q) { return {MoveKind::exchange, p, q}; }
  static PrimitiveMove relation(long p) { return {MoveKind::relation, p, 0}; }
  static PrimitiveMove rotate(long k) { return {MoveKind::rotate, k, 0}; }
  static PrimitiveMove reduce() { return {MoveKind::free_reduce, 0, 0}; }
  static PrimitiveMove destabilize() { return {MoveKind::destabilize, 0, 0}; }

  // Throws MoveError when the move does not apply.
  BraidWord apply(const BraidWord& w) const;
  std::string to_string() const;
};

// A transition of the move table: the moves and the word they must produce.
struct ReplayStep {
  std::string label;  // exchange, relations, conjugation, destabilization
  std::vector<PrimitiveMove> moves;
  BraidWord expected;
};

struct ReplayLogEntry {
  std::size_t step = 0;  // 1-based
  std::string label;
  std::vector<std::string> moves;
  BraidWord word;
};

struct ReplayResult {
  std::vector<ReplayLogEntry> log;  // completed steps
  BraidWord final_word;
  std::optional<std::size_t> failed_step;  // 1-based
  std::string error;
  bool ok() const { return !failed_step; }
};

// The unknotting sequence for morton_unknot(), ending at the empty word in B_1.
std::vector<ReplayStep> morton_script();

// Applies each step's moves in order, checking legality and the expected
// word; stops at the first illegal step.
ReplayResult replay(const BraidWord& start, std::span<const ReplayStep> script);

}  // namespace braidinv
