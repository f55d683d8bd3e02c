#include "braidinv/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "braidinv/error.hpp"

namespace braidinv {

// ----- BraidLetter -------------------------------------------------------

BraidLetter BraidLetter::from_signed(int signed_index) {
  if (signed_index == 0) throw std::invalid_argument("generator index 0 does not exist");
  return signed_index > 0 ? pos(signed_index) : neg(-signed_index);
}

int BraidLetter::sign() const {
  switch (kind) {
    case LetterKind::positive: return 1;
    case LetterKind::negative: return -1;
    case LetterKind::singular: break;
  }
  throw std::domain_error("singular letter has no crossing sign");
}

BraidLetter BraidLetter::inverse() const {
  switch (kind) {
    case LetterKind::positive: return neg(index);
    case LetterKind::negative: return pos(index);
    case LetterKind::singular: break;
  }
  throw std::domain_error("singular letter has no inverse");
}

// ----- BraidWord ---------------------------------------------------------

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters) : n_(strands), letters_(std::move(letters)) {
  if (n_ < 1) throw std::invalid_argument("braid index must be at least 1");
  for (const auto& l : letters_) check_letter(l);
}

void BraidWord::check_letter(const BraidLetter& l) const {
  if (l.index < 1 || l.index > n_ - 1)
    throw std::invalid_argument("generator index " + std::to_string(l.index) + " outside 1.." + std::to_string(n_ - 1));
}

BraidWord BraidWord::from_signed(int strands, std::span<const int> letters) {
  std::vector<BraidLetter> out;
  out.reserve(letters.size());
  for (int s : letters) out.push_back(BraidLetter::from_signed(s));
  return BraidWord(strands, std::move(out));
}

BraidWord BraidWord::from_signed(int strands, std::initializer_list<int> letters) {
  return from_signed(strands, std::span<const int>(letters.begin(), letters.size()));
}

bool BraidWord::has_singular() const {
  return std::any_of(letters_.begin(), letters_.end(), [](const BraidLetter& l) { return l.is_singular(); });
}

std::size_t BraidWord::singular_count() const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [](const BraidLetter& l) { return l.is_singular(); }));
}

std::vector<int> BraidWord::signed_indices() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (l.is_singular()) throw DomainError("singular letter in a word that must be non-singular");
    out.push_back(l.sign() * l.index);
  }
  return out;
}

BraidWord BraidWord::embedded(int strands) const {
  if (strands < n_) throw std::invalid_argument("cannot embed B_" + std::to_string(n_) + " into a smaller braid group");
  BraidWord out = *this;
  out.n_ = strands;
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out(n_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    if (it->is_singular()) throw DomainError("a singular braid has no inverse");
    out.letters_.push_back(it->inverse());
  }
  return out;
}

BraidWord& BraidWord::append(const BraidLetter& letter) {
  check_letter(letter);
  letters_.push_back(letter);
  return *this;
}

BraidWord& BraidWord::append(const BraidWord& tail) {
  if (tail.n_ != n_)
    throw std::invalid_argument("concatenating words from B_" + std::to_string(n_) + " and B_" + std::to_string(tail.n_));
  letters_.insert(letters_.end(), tail.letters_.begin(), tail.letters_.end());
  return *this;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << ';';
  for (const auto& l : letters_) {
    os << ' ';
    if (l.is_singular())
      os << 'S' << l.index;
    else
      os << l.sign() * l.index;
  }
  return os.str();
}

// ----- parsing -----------------------------------------------------------

namespace {

int parse_int(std::string_view tok, std::string_view what) {
  int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError("malformed " + std::string(what) + " '" + std::string(tok) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  text = trim(text);
  int declared = 0;
  if (text.starts_with("n=") || text.starts_with("n =")) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("braid header 'n=<int>' must end with ';'");
    auto header = trim(text.substr(1, semi - 1));
    if (header.empty() || header.front() != '=') throw ParseError("malformed braid header");
    declared = parse_int(trim(header.substr(1)), "strand count");
    if (declared < 1) throw ParseError("strand count must be at least 1");
    text = text.substr(semi + 1);
  }

  std::vector<BraidLetter> letters;
  int max_index = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',') ++end;
    const std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    BraidLetter letter;
    if (tok.front() == 'S' || tok.front() == 's') {
      const int i = parse_int(tok.substr(1), "singular letter");
      if (i < 1) throw ParseError("singular letter index must be positive in '" + std::string(tok) + "'");
      letter = BraidLetter::sing(i);
    } else {
      const int v = parse_int(tok, "braid letter");
      if (v == 0) throw ParseError("braid letter 0 does not exist");
      letter = BraidLetter::from_signed(v);
    }
    max_index = std::max(max_index, letter.index);
    letters.push_back(letter);
  }

  const int n = declared > 0 ? declared : max_index + 1;
  if (max_index >= n)
    throw ParseError("letter index " + std::to_string(max_index) + " needs at least " + std::to_string(max_index + 1) +
                     " strands but n=" + std::to_string(n));
  return BraidWord(n, std::move(letters));
}

// ----- combinatorics -----------------------------------------------------

Permutation permutation_of(const BraidWord& w, bool allow_singular) {
  // positions[p-1] = current position of the strand that entered at p.
  std::vector<int> position(static_cast<std::size_t>(w.strands()));
  std::vector<int> occupant(static_cast<std::size_t>(w.strands()));
  for (int p = 1; p <= w.strands(); ++p) {
    position[static_cast<std::size_t>(p - 1)] = p;
    occupant[static_cast<std::size_t>(p - 1)] = p;
  }
  for (const auto& l : w.letters()) {
    if (l.is_singular() && !allow_singular) throw DomainError("singular letter in permutation_of");
    auto& left = occupant[static_cast<std::size_t>(l.index - 1)];
    auto& right = occupant[static_cast<std::size_t>(l.index)];
    std::swap(left, right);
    position[static_cast<std::size_t>(left - 1)] = l.index;
    position[static_cast<std::size_t>(right - 1)] = l.index + 1;
  }
  return Permutation(std::move(position));
}

int writhe(const BraidWord& w) {
  int total = 0;
  for (const auto& l : w.letters()) {
    if (l.is_singular()) throw DomainError("writhe is undefined for singular braids");
    total += l.sign();
  }
  return total;
}

bool is_knot(const BraidWord& w) { return permutation_of(w, true).is_full_cycle(); }

// ----- moves -------------------------------------------------------------

BraidWord cyclic_rotate(const BraidWord& w, long k) {
  if (w.empty()) return w;
  const long len = static_cast<long>(w.size());
  const long shift = ((k % len) + len) % len;
  std::vector<BraidLetter> out(w.letters().begin() + shift, w.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().begin() + shift);
  return BraidWord(w.strands(), std::move(out));
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) { return g * w * g.inverse(); }

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && !l.is_singular() && !stack.back().is_singular() && stack.back().index == l.index &&
        stack.back().kind != l.kind) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord apply_braid_relation(const BraidWord& w, std::size_t position) {
  const auto letters = w.letters();
  if (position + 1 >= letters.size())
    throw MoveError("no braid relation at position " + std::to_string(position) + ": word too short");
  const BraidLetter a = letters[position];
  const BraidLetter b = letters[position + 1];
  std::vector<BraidLetter> out(letters.begin(), letters.end());

  if (std::abs(a.index - b.index) >= 2) {
    std::swap(out[position], out[position + 1]);
    return BraidWord(w.strands(), std::move(out));
  }
  if (position + 2 < letters.size() && std::abs(a.index - b.index) == 1) {
    const BraidLetter c = letters[position + 2];
    const bool singular = a.is_singular() || b.is_singular() || c.is_singular();
    if (!singular && c.index == a.index && (b.kind == a.kind || b.kind == c.kind)) {
      out[position] = BraidLetter{b.index, c.kind};
      out[position + 1] = BraidLetter{a.index, b.kind};
      out[position + 2] = BraidLetter{b.index, a.kind};
      return BraidWord(w.strands(), std::move(out));
    }
  }
  throw MoveError("no braid relation pattern at position " + std::to_string(position));
}

BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be +1 or -1");
  BraidWord out = w.embedded(w.strands() + 1);
  out.append(sign > 0 ? BraidLetter::pos(w.strands()) : BraidLetter::neg(w.strands()));
  return out;
}

BraidWord destabilize(const BraidWord& w) {
  const int n = w.strands();
  if (n < 2) throw MoveError("cannot destabilize a braid on one strand");
  const auto letters = w.letters();
  const auto top_count = std::count_if(letters.begin(), letters.end(),
                                       [n](const BraidLetter& l) { return l.index == n - 1; });
  if (top_count != 1 || letters.back().index != n - 1 || letters.back().is_singular())
    throw MoveError("destabilization needs sigma_" + std::to_string(n - 1) +
                    " exactly once, as the final letter");
  return BraidWord(n - 1, std::vector<BraidLetter>(letters.begin(), letters.end() - 1));
}

BraidWord exchange_move(const BraidWord& w, std::size_t first, std::size_t second) {
  const int n = w.strands();
  const auto letters = w.letters();
  if (first >= second || second >= letters.size())
    throw MoveError("exchange positions must satisfy first < second < length");
  const BraidLetter a = letters[first];
  const BraidLetter b = letters[second];
  if (a.is_singular() || b.is_singular() || a.index != b.index || a.kind == b.kind)
    throw MoveError("exchange needs the same generator twice with opposite signs");
  if (n < 3 || (a.index != n - 1 && a.index != 1))
    throw MoveError("exchange letters must be an end generator of B_n with n >= 3");

  // Letters other than the two exchange crossings must stay off the outer
  // strand touched by the exchange generator.
  const bool top = a.index == n - 1;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k == first || k == second) continue;
    const bool touches = top ? letters[k].index == n - 1 : letters[k].index == 1;
    if (touches)
      throw MoveError("letter at position " + std::to_string(k) + " touches the exchange strand");
  }
  std::vector<BraidLetter> out(letters.begin(), letters.end());
  out[first] = a.inverse();
  out[second] = b.inverse();
  return BraidWord(n, std::move(out));
}

BraidWord flip(const BraidWord& w) {
  std::vector<BraidLetter> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) out.push_back(BraidLetter{w.strands() - l.index, l.kind});
  return BraidWord(w.strands(), std::move(out));
}

// ----- exchange pairs ----------------------------------------------------

BraidWord ExchangePair::reference() const {
  const int n = base_strands();
  BraidWord out = x.embedded(n + 1);
  out.append(BraidLetter::pos(n));
  out.append(y.embedded(n + 1));
  out.append(BraidLetter::pos(n));
  return out;
}

ExchangePair exchange_pair(const BraidWord& x, const BraidWord& y) {
  if (x.strands() != y.strands())
    throw std::invalid_argument("X is in B_" + std::to_string(x.strands()) + " but Y is in B_" +
                                std::to_string(y.strands()));
  if (x.has_singular() || y.has_singular()) throw DomainError("exchange pairs need non-singular X and Y");
  const int n = x.strands();
  const BraidWord xe = x.embedded(n + 1);
  const BraidWord ye = y.embedded(n + 1);

  BraidWord beta1 = xe;
  beta1.append(BraidLetter::neg(n)).append(ye).append(BraidLetter::pos(n));
  BraidWord beta2 = xe;
  beta2.append(BraidLetter::pos(n)).append(ye).append(BraidLetter::neg(n));
  return ExchangePair{x, y, std::move(beta1), std::move(beta2)};
}

namespace {

struct TopBlocks {
  bool avoids = true;
  bool all_even = true;
};

TopBlocks scan_top_blocks(const BraidWord& w) {
  const int top = w.strands() - 1;
  TopBlocks out;
  int run = 0;
  bool in_block = false;
  auto close = [&] {
    if (in_block && run % 2 != 0) out.all_even = false;
    in_block = false;
    run = 0;
  };
  for (const auto& l : w.letters()) {
    if (l.index == top) {
      out.avoids = false;
      in_block = true;
      run += l.sign();
    } else {
      close();
    }
  }
  close();
  return out;
}

}  // namespace

std::vector<std::string> TrivialityReport::reasons() const {
  std::vector<std::string> out;
  if (x_avoids_top) out.emplace_back("X avoids sigma_{n-1}: X commutes with sigma_n, so beta1 and beta2 are conjugate");
  if (y_avoids_top) out.emplace_back("Y avoids sigma_{n-1}: Y commutes with sigma_n, so beta1 and beta2 are conjugate");
  if (even_top_blocks)
    out.emplace_back("every sigma_{n-1} block in X and Y has even exponent: the closure cannot be a knot");
  return out;
}

TrivialityReport triviality_filters(const BraidWord& x, const BraidWord& y) {
  if (x.strands() != y.strands()) throw std::invalid_argument("X and Y must live in the same braid group");
  const TopBlocks bx = scan_top_blocks(x);
  const TopBlocks by = scan_top_blocks(y);
  TrivialityReport r;
  r.x_avoids_top = bx.avoids;
  r.y_avoids_top = by.avoids;
  r.even_top_blocks = bx.all_even && by.all_even;
  return r;
}

}  // namespace braidinv
