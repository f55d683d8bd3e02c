#include "braidinv/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidinv {

Permutation::Permutation(int n) {
  if (n < 0) throw std::invalid_argument("permutation size must be non-negative");
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a bijection of {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("transposition (i i+1) outside {1.." + std::to_string(n) + "}");
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::from_cycle(int n, std::span<const int> cycle) {
  Permutation p(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const int from = cycle[k];
    if (from < 1 || from > n) throw std::out_of_range("cycle entry outside {1..n}");
    if (used[static_cast<std::size_t>(from - 1)]) throw std::invalid_argument("repeated entry in cycle");
    used[static_cast<std::size_t>(from - 1)] = true;
    p.images_[static_cast<std::size_t>(from - 1)] = cycle[(k + 1) % cycle.size()];
  }
  return p;
}

Permutation Permutation::from_cycles(int n, std::span<const std::vector<int>> cycles) {
  Permutation p(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& c : cycles) {
    for (int v : c) {
      if (v < 1 || v > n) throw std::out_of_range("cycle entry outside {1..n}");
      if (used[static_cast<std::size_t>(v - 1)]) throw std::invalid_argument("cycles are not disjoint");
      used[static_cast<std::size_t>(v - 1)] = true;
    }
    p = p.then(from_cycle(n, c));
  }
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw std::invalid_argument("composing permutations of different degree");
  Permutation out(size());
  for (std::size_t k = 0; k < images_.size(); ++k) out.images_[k] = next.images_[static_cast<std::size_t>(images_[k] - 1)];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(size());
  for (std::size_t k = 0; k < images_.size(); ++k) out.images_[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  return out;
}

int Permutation::sign() const {
  // (-1)^(n - #cycles)
  return (size() - cycle_count()) % 2 == 0 ? 1 : -1;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    int len = 0;
    for (int v = start; !seen[static_cast<std::size_t>(v - 1)]; v = (*this)(v)) {
      seen[static_cast<std::size_t>(v - 1)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

int Permutation::cycle_count() const { return static_cast<int>(cycle_type().size()); }

int Permutation::cycle_length_containing(int point) const {
  if (point < 1 || point > size()) throw std::out_of_range("point outside {1..n}");
  int len = 1;
  for (int v = (*this)(point); v != point; v = (*this)(v)) ++len;
  return len;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
    any = true;
    os << '(';
    for (int v = start; !seen[static_cast<std::size_t>(v - 1)]; v = (*this)(v)) {
      if (v != start) os << ' ';
      seen[static_cast<std::size_t>(v - 1)] = true;
      os << v;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace braidinv
