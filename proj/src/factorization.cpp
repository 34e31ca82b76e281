#include "wqsym/factorization.hpp"

#include <algorithm>

namespace wqsym {

std::string LastLetterLabel::str() const {
  return std::to_string(value) + (mark == Mark::New ? "o" : "*");
}

PackedWord insert_maxima(const PackedWord& w, const MaxPositions& I) {
  const int p = static_cast<int>(I.size());
  if (p == 0) throw std::invalid_argument("insert_maxima: empty position list");
  for (int k = 1; k < p; ++k)
    if (I[k - 1] >= I[k])
      throw std::invalid_argument("insert_maxima: positions not increasing");
  if (I.front() < 1 || I.back() > w.size() + p)
    throw std::out_of_range("insert_maxima: position out of range");
  const int mprime = w.max() + 1;
  Letters r(w.size() + p, 0);
  for (int pos : I) r[pos - 1] = mprime;
  int j = 0;
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    if (r[i] == 0) r[i] = w.letters()[j++];
  return PackedWord(std::move(r));
}

std::pair<MaxPositions, PackedWord> decompose_maxima(const PackedWord& W) {
  if (W.empty()) throw std::invalid_argument("decompose_maxima: empty word");
  MaxPositions I;
  Letters rest;
  for (int i = 1; i <= W.size(); ++i) {
    if (W[i] == W.max())
      I.push_back(i);
    else
      rest.push_back(W[i]);
  }
  return {I, PackedWord(std::move(rest))};
}

PackedWord ins(const PackedWord& u, const PackedWord& v) {
  if (v.empty()) throw std::invalid_argument("ins: right factor must be nonempty");
  auto [I, vp] = decompose_maxima(v);
  for (int& x : I) x += u.size();
  return insert_maxima(shifted_concat_left(u, vp), I);
}

PackedWord append_letter(const PackedWord& w, const LastLetterLabel& label) {
  const int i = label.value;
  if (label.mark == Mark::New) {
    if (i < 1 || i > w.max() + 1)
      throw std::out_of_range("append_letter: fresh value out of range");
    Letters r = w.letters();
    for (int& x : r)
      if (x >= i) ++x;
    r.push_back(i);
    return PackedWord(std::move(r));
  }
  if (i < 1 || i > w.max())
    throw std::out_of_range("append_letter: repeated value out of range");
  Letters r = w.letters();
  r.push_back(i);
  return PackedWord(std::move(r));
}

std::pair<LastLetterLabel, PackedWord> decompose_last(const PackedWord& W) {
  if (W.empty()) throw std::invalid_argument("decompose_last: empty word");
  const int i = W.letters().back();
  const long multiplicity = std::count(W.letters().begin(), W.letters().end(), i);
  Letters head(W.letters().begin(), W.letters().end() - 1);
  if (multiplicity > 1) return {{i, Mark::Repeat}, PackedWord(std::move(head))};
  return {{i, Mark::New}, pack(head)};
}

PackedWord insl(const PackedWord& u, const PackedWord& v) {
  if (v.empty()) throw std::invalid_argument("insl: right factor must be nonempty");
  auto [label, vp] = decompose_last(v);
  label.value += u.max();
  return append_letter(shifted_concat_left(vp, u), label);
}

std::pair<PackedWord, PackedWord> red_factorize(const PackedWord& w) {
  if (!is_irreducible(w))
    throw std::invalid_argument("red_factorize: word must be irreducible");
  auto [I, core] = decompose_maxima(w);
  // Factors of the stripped word lying entirely before the first maximum go
  // into u; positions 1..I[0]-1 of w are exactly the first I[0]-1 letters of
  // the stripped word.
  std::vector<PackedWord> factors = gd_decompose(core);
  int cut = 0;  // length of the prefix of `core` that joins u
  int acc = 0;
  for (const PackedWord& f : factors) {
    if (acc + f.size() <= I.front() - 1)
      acc += f.size();
    else
      break;
  }
  cut = acc;
  Letters prefix(core.letters().begin(), core.letters().begin() + cut);
  Letters suffix(core.letters().begin() + cut, core.letters().end());
  PackedWord u = pack(prefix);
  PackedWord vp(std::move(suffix));  // suffix at a descent boundary is packed
  MaxPositions Ip = I;
  for (int& x : Ip) x -= cut;
  return {u, insert_maxima(vp, Ip)};
}

bool is_red_irreducible(const PackedWord& w) {
  if (!is_irreducible(w)) return false;
  return red_factorize(w).first.empty();
}

std::pair<PackedWord, PackedWord> blue_factorize(const PackedWord& w) {
  if (!is_irreducible(w))
    throw std::invalid_argument("blue_factorize: word must be irreducible");
  const int last = w.letters().back();
  if (last == w.max() &&
      std::count(w.letters().begin(), w.letters().end(), last) == 1) {
    // w = w' dcdot 1, split off everything but the last letter
    Letters head(w.letters().begin(), w.letters().end() - 1);
    return {PackedWord(std::move(head)), PackedWord(Letters{1})};
  }
  auto [label, core] = decompose_last(w);
  std::vector<PackedWord> factors = gd_decompose(core);
  const int cut = factors.front().size();
  Letters prefix(core.letters().begin(), core.letters().begin() + cut);
  Letters suffix(core.letters().begin() + cut, core.letters().end());
  PackedWord vp = pack(prefix);
  PackedWord u(std::move(suffix));
  label.value -= u.max();
  return {u, append_letter(vp, label)};
}

bool is_blue_irreducible(const PackedWord& w) {
  if (!is_irreducible(w)) return false;
  return blue_factorize(w).first.empty();
}

Bifactorization red_blue_factorize(const PackedWord& w) {
  auto [x, u] = red_factorize(w);
  auto [y, z] = blue_factorize(u);
  return {x, y, z};
}

Bifactorization blue_red_factorize(const PackedWord& w) {
  auto [y, u] = blue_factorize(w);
  auto [x, z] = red_factorize(u);
  return {y, x, z};
}

}  // namespace wqsym
