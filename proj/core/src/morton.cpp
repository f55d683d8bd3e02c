#include "braidinv/morton.hpp"

#include "braidinv/error.hpp"
#include "braidinv/families.hpp"

namespace braidinv {

BraidWord PrimitiveMove::apply(const BraidWord& w) const {
  switch (kind) {
    case MoveKind::exchange:
      if (first < 0 || second < 0) throw MoveError("negative exchange position");
      return exchange_move(w, static_cast<std::size_t>(first), static_cast<std::size_t>(second));
    case MoveKind::relation:
      if (first < 0) throw MoveError("negative relation position");
      return apply_braid_relation(w, static_cast<std::size_t>(first));
    case MoveKind::rotate: return cyclic_rotate(w, first);
    case MoveKind::free_reduce: return free_reduce(w);
    case MoveKind::destabilize: return braidinv::destabilize(w);
  }
  throw MoveError("unknown move");
}

std::string PrimitiveMove::to_string() const {
  switch (kind) {
    case MoveKind::exchange: return "exchange(" + std::to_string(first) + "," + std::to_string(second) + ")";
    case MoveKind::relation: return "relation(" + std::to_string(first) + ")";
    case MoveKind::rotate: return "rotate(" + std::to_string(first) + ")";
    case MoveKind::free_reduce: return "free_reduce";
    case MoveKind::destabilize: return "destabilize";
  }
  return "?";
}

std::vector<ReplayStep> morton_script() {
  using M = PrimitiveMove;
  auto w = [](int n, std::initializer_list<int> letters) { return BraidWord::from_signed(n, letters); };
  return {
      {"exchange", {M::exchange(3, 8)}, w(4, {2, 2, 2, 1, 2, -3, -2, -2, -1, -2, 3})},
      {"relations", {M::relation(7)}, w(4, {2, 2, 2, 1, 2, -3, -2, -1, -2, -1, 3})},
      {"relations", {M::relation(6)}, w(4, {2, 2, 2, 1, 2, -3, -1, -2, -1, -1, 3})},
      {"relations", {M::relation(5), M::relation(9), M::relation(8)}, w(4, {2, 2, 2, 1, 2, -1, -3, -2, 3, -1, -1})},
      {"conjugation", {M::rotate(-2), M::relation(8)}, w(4, {-1, -1, 2, 2, 2, 1, 2, -1, 2, -3, -2})},
      {"conjugation", {M::rotate(-1)}, w(4, {-2, -1, -1, 2, 2, 2, 1, 2, -1, 2, -3})},
      {"destabilization", {M::destabilize()}, w(3, {-2, -1, -1, 2, 2, 2, 1, 2, -1, 2})},
      {"conjugation", {M::rotate(-1), M::reduce()}, w(3, {-1, -1, 2, 2, 2, 1, 2, -1})},
      {"relations", {M::relation(4)}, w(3, {-1, -1, 2, 2, 1, 2, 1, -1})},
      {"relations", {M::reduce()}, w(3, {-1, -1, 2, 2, 1, 2})},
      {"relations", {M::relation(3)}, w(3, {-1, -1, 2, 1, 2, 1})},
      {"conjugation", {M::rotate(-1), M::reduce()}, w(3, {-1, 2, 1, 2})},
      {"relations", {M::relation(1)}, w(3, {-1, 1, 2, 1})},
      {"conjugation", {M::reduce(), M::rotate(1)}, w(3, {1, 2})},
      {"destabilization", {M::destabilize(), M::destabilize()}, w(1, {})},
  };
}

ReplayResult replay(const BraidWord& start, std::span<const ReplayStep> script) {
  ReplayResult out;
  BraidWord current = start;
  for (std::size_t k = 0; k < script.size(); ++k) {
    const ReplayStep& step = script[k];
    ReplayLogEntry entry{k + 1, step.label, {}, {}};
    try {
      for (const auto& m : step.moves) {
        current = m.apply(current);
        entry.moves.push_back(m.to_string());
      }
      if (current != step.expected)
        throw MoveError("produced " + current.to_string() + " but the table expects " + step.expected.to_string());
    } catch (const MoveError& e) {
      out.failed_step = k + 1;
      out.error = "step " + std::to_string(k + 1) + " (" + step.label + "): " + e.what();
      out.final_word = current;
      return out;
    }
    entry.word = current;
    out.log.push_back(std::move(entry));
  }
  out.final_word = current;
  return out;
}

}  // namespace braidinv
