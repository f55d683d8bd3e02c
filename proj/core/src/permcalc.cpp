#include "braidinv/permcalc.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "braidinv/error.hpp"

namespace braidinv {

std::vector<int> CycleDecomposition::lengths() const {
  std::vector<int> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string CycleDecomposition::to_string() const {
  std::string out;
  for (const auto& c : cycles)
    if (c.size() >= 2) out += format_cycle(c);
  return out.empty() ? "()" : out;
}

CycleDecomposition cycles(const Permutation& p) {
  CycleDecomposition out;
  out.n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    Cycle c;
    for (int v = start; !seen[static_cast<std::size_t>(v - 1)]; v = p(v)) {
      seen[static_cast<std::size_t>(v - 1)] = true;
      c.push_back(v);
    }
    out.cycles.push_back(std::move(c));
  }
  return out;
}

std::vector<Cycle> parse_cycles(std::string_view text) {
  std::vector<Cycle> out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw ParseError("empty cycle text");
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' at offset " + std::to_string(pos));
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle");
    Cycle c;
    std::size_t k = pos + 1;
    while (k < close) {
      while (k < close && (std::isspace(static_cast<unsigned char>(text[k])) || text[k] == ',')) ++k;
      if (k >= close) break;
      std::size_t end = k;
      while (end < close && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',') ++end;
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + k, text.data() + end, v);
      if (ec != std::errc{} || ptr != text.data() + end || v < 1)
        throw ParseError("malformed cycle entry '" + std::string(text.substr(k, end - k)) + "'");
      if (std::find(c.begin(), c.end(), v) != c.end())
        throw ParseError("digit " + std::to_string(v) + " repeated inside a cycle");
      c.push_back(v);
      k = end;
    }
    if (!c.empty()) out.push_back(std::move(c));
    pos = close + 1;
    skip_space();
  }
  return out;
}

Cycle parse_cycle(std::string_view text) {
  auto cs = parse_cycles(text);
  if (cs.size() != 1) throw ParseError("expected exactly one cycle in '" + std::string(text) + "'");
  return std::move(cs.front());
}

std::string format_cycle(const Cycle& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
  os << ')';
  return os.str();
}

int max_point(const std::vector<Cycle>& cs) {
  int m = 0;
  for (const auto& c : cs)
    for (int v : c) m = std::max(m, v);
  return m;
}

Permutation product_of_cycles(int n, const std::vector<Cycle>& cs) {
  Permutation p(n);
  for (const auto& c : cs) p = p.then(Permutation::from_cycle(n, c));
  return p;
}

// ----- intersection order ------------------------------------------------

namespace {

// Position k (1-based) -> rank of the k-th common digit in the support.
Permutation visit_order(const Cycle& c, const std::vector<int>& support) {
  std::vector<int> images;
  images.reserve(support.size());
  for (int v : c) {
    auto it = std::lower_bound(support.begin(), support.end(), v);
    if (it != support.end() && *it == v) images.push_back(static_cast<int>(it - support.begin()) + 1);
  }
  return Permutation(std::move(images));
}

}  // namespace

std::string IntersectionOrder::on_support(const Permutation& p) const {
  const auto decomposition = cycles(p);
  std::string out;
  for (const auto& c : decomposition.cycles) {
    if (c.size() < 2) continue;
    Cycle relabelled;
    for (int k : c) relabelled.push_back(support[static_cast<std::size_t>(k - 1)]);
    out += format_cycle(relabelled);
  }
  return out.empty() ? "()" : out;
}

IntersectionOrder intersection_order(const Cycle& a, const Cycle& b) {
  std::vector<int> sa(a.begin(), a.end());
  std::vector<int> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<int> support;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(support));
  if (support.empty()) throw DomainError("cycles " + format_cycle(a) + " and " + format_cycle(b) + " are disjoint");

  Permutation nu_a = visit_order(a, support);
  Permutation nu_b = visit_order(b, support);
  Permutation nu_ab = nu_a.inverse().then(nu_b);
  return IntersectionOrder{std::move(support), std::move(nu_a), std::move(nu_b), std::move(nu_ab)};
}

namespace {

void require_cover(const Cycle& a, const Cycle& b, int n) {
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const Cycle* c : {&a, &b})
    for (int v : *c) {
      if (v < 1 || v > n) throw DomainError("digit " + std::to_string(v) + " outside {1.." + std::to_string(n) + "}");
      hit[static_cast<std::size_t>(v - 1)] = true;
    }
  const auto missing = std::find(hit.begin(), hit.end(), false);
  if (missing != hit.end())
    throw DomainError("A and B do not cover {1.." + std::to_string(n) + "}: " +
                      std::to_string(missing - hit.begin() + 1) + " is missing");
}

}  // namespace

bool is_full_cycle_product(const Cycle& a, const Cycle& b, int n) {
  require_cover(a, b, n);
  const bool share = std::any_of(a.begin(), a.end(), [&](int v) { return std::find(b.begin(), b.end(), v) != b.end(); });
  if (!share) return false;
  const auto order = intersection_order(a, b);
  return order.support.size() % 2 == 1 && order.nu_ab.sign() == 1;
}

bool product_is_full_cycle(const Cycle& a, const Cycle& b, int n) {
  return product_of_cycles(n, {a, b}).is_full_cycle();
}

// ----- exchange lengths --------------------------------------------------

ExchangeLengths exchange_lengths(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("A and B act on different ground sets");
  const int big = a.size();
  if (big < 2) throw DomainError("exchange lengths need at least two points");
  if (!a.then(b).is_full_cycle())
    throw DomainError("A*B is not a full cycle: cycle type " + cycles(a.then(b)).to_string());

  const int n = big - 1;
  const Permutation s = Permutation::transposition(big, n);
  const Permutation between = a.then(s).then(b);
  const Permutation after = a.then(b).then(s);

  ExchangeLengths out;
  out.base_strands = n;
  out.with_swap_between = between.cycle_type();
  out.with_swap_after = after.cycle_type();

  auto sorted_pair = [](int x, int y) { return std::vector<int>{std::max(x, y), std::min(x, y)}; };
  if (out.with_swap_between.size() == 2 && out.with_swap_after.size() == 2) {
    for (int l : out.with_swap_between) {
      if (sorted_pair(l, big - l) == out.with_swap_between && l >= 2 &&
          sorted_pair(l - 1, big + 1 - l) == out.with_swap_after) {
        out.l = l;
        out.length_pattern = true;
        break;
      }
    }
  }
  out.swapped = between.cycle_length_containing(n) < after.cycle_length_containing(n);
  return out;
}

ExchangeLengths exchange_lengths(const Cycle& a, const Cycle& b, int n) {
  const int big = n + 1;
  return exchange_lengths(Permutation::from_cycle(big, a), Permutation::from_cycle(big, b));
}

ExchangeLengths exchange_lengths(const ExchangePair& pair) {
  const int big = pair.base_strands() + 1;
  const Permutation a = permutation_of(pair.x.embedded(big));
  const Permutation s = Permutation::transposition(big, big - 1);
  const Permutation b = s.then(permutation_of(pair.y.embedded(big))).then(s);
  return exchange_lengths(a, b);
}

}  // namespace braidinv
