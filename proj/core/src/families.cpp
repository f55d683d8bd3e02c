#include "braidinv/families.hpp"

#include <stdexcept>
#include <string>

namespace braidinv {

ExchangePair example1_pair(int k) {
  if (k < 0) throw std::invalid_argument("ex1 needs k >= 0");
  BraidWord y = BraidWord::from_signed(4, {3});
  for (int r = 0; r < 2 * k + 1; ++r) y.append(BraidLetter::pos(2));
  y.append(BraidLetter::pos(1));
  return exchange_pair(BraidWord::from_signed(4, {3, 2, 1}), y);
}

ExchangePair example2_pair() {
  return exchange_pair(BraidWord::from_signed(4, {3, 2, 1}), BraidWord::from_signed(4, {2, 1, 3}));
}

ExchangePair example3_pair(int n, int i) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("ex3 needs an even n >= 2, got " + std::to_string(n));
  if (i < 1 || i > n - 1)
    throw std::invalid_argument("ex3 needs 1 <= i <= " + std::to_string(n - 1) + ", got " + std::to_string(i));
  BraidWord x(n);
  for (int g = n - 1; g >= 1; --g) x.append(BraidLetter::pos(g));
  BraidWord y(n);
  for (int g = n - 1; g > i; --g) y.append(BraidLetter::pos(g));
  y.append(BraidLetter::pos(i));
  for (int g = i + 1; g <= n - 1; ++g) y.append(BraidLetter::neg(g));
  return exchange_pair(x, y);
}

BraidWord morton_unknot() { return BraidWord::from_signed(4, {2, 2, 2, -1, 2, -3, -2, -2, 1, -2, 3}); }

namespace {

BraidWord morton_x() { return BraidWord::from_signed(4, {-2, 3, 2, 2, 2}); }
BraidWord morton_y() { return BraidWord::from_signed(4, {2, -3, -2, -2}); }

}  // namespace

BraidWord morton_beta1() {
  BraidWord w = morton_x();
  w.append(BraidLetter::neg(1)).append(morton_y()).append(BraidLetter::pos(1));
  return w;
}

BraidWord morton_beta2() {
  BraidWord w = morton_x();
  w.append(BraidLetter::pos(1)).append(morton_y()).append(BraidLetter::neg(1));
  return w;
}

ExchangePair morton_pair() {
  const BraidWord x = flip(morton_x());
  const BraidWord y = flip(morton_y());
  return exchange_pair(BraidWord(3, {x.letters().begin(), x.letters().end()}),
                       BraidWord(3, {y.letters().begin(), y.letters().end()}));
}

}  // namespace braidinv
