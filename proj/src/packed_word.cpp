#include "wqsym/packed_word.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wqsym {

bool PackedWord::is_packed(const Letters& letters) {
  int m = 0;
  for (int x : letters) {
    if (x <= 0) return false;
    m = std::max(m, x);
  }
  if (m > static_cast<int>(letters.size())) return false;
  std::vector<char> seen(m + 1, 0);
  for (int x : letters) seen[x] = 1;
  for (int v = 1; v <= m; ++v)
    if (!seen[v]) return false;
  return true;
}

PackedWord::PackedWord(Letters letters) : letters_(std::move(letters)) {
  if (!is_packed(letters_)) throw std::invalid_argument("word is not packed");
  for (int x : letters_) max_ = std::max(max_, x);
}

std::strong_ordering PackedWord::operator<=>(const PackedWord& o) const {
  if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
  return letters_ <=> o.letters_;
}

std::string PackedWord::str() const {
  std::ostringstream os;
  if (max_ <= 9) {
    for (int x : letters_) os << x;
    if (letters_.empty()) os << "e";
  } else {
    for (size_t i = 0; i < letters_.size(); ++i) {
      if (i) os << ',';
      os << letters_[i];
    }
  }
  return os.str();
}

PackedWord PackedWord::parse(const std::string& s) {
  Letters letters;
  if (s.empty() || s == "e" || s == "eps" || s == "epsilon") return PackedWord{};
  if (s.find(',') != std::string::npos) {
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("bad word literal: " + s);
      letters.push_back(std::stoi(tok));
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad word literal: " + s);
      letters.push_back(c - '0');
    }
  }
  return PackedWord(std::move(letters));
}

Letters shift(const Letters& w, int k) {
  Letters r = w;
  for (int& x : r) x += k;
  return r;
}

PackedWord pack(const Letters& word) {
  for (int x : word)
    if (x <= 0) throw std::invalid_argument("letters must be positive");
  std::set<int> values(word.begin(), word.end());
  std::map<int, int> rank;
  int i = 0;
  for (int v : values) rank[v] = ++i;
  Letters r;
  r.reserve(word.size());
  for (int x : word) r.push_back(rank[x]);
  return PackedWord(std::move(r));
}

PackedWord standardize(const Letters& word) {
  for (int x : word)
    if (x <= 0) throw std::invalid_argument("letters must be positive");
  const int n = static_cast<int>(word.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return word[a] < word[b]; });
  Letters r(n);
  for (int k = 0; k < n; ++k) r[idx[k]] = k + 1;
  return PackedWord(std::move(r));
}

PackedWord shifted_concat_left(const PackedWord& u, const PackedWord& v) {
  Letters r = shift(u.letters(), v.max());
  r.insert(r.end(), v.letters().begin(), v.letters().end());
  return PackedWord(std::move(r));
}

PackedWord shifted_concat_right(const PackedWord& u, const PackedWord& v) {
  Letters r = u.letters();
  Letters sv = shift(v.letters(), u.max());
  r.insert(r.end(), sv.begin(), sv.end());
  return PackedWord(std::move(r));
}

PackedWord restrict_le(const PackedWord& u, int i) {
  Letters r;
  for (int x : u.letters())
    if (x <= i) r.push_back(x);
  return PackedWord(std::move(r));
}

Letters restrict_gt(const PackedWord& u, int i) {
  Letters r;
  for (int x : u.letters())
    if (x > i) r.push_back(x);
  return r;
}

std::vector<int> global_descents(const PackedWord& w) {
  const auto& a = w.letters();
  const int n = w.size();
  std::vector<int> res;
  if (n < 2) return res;
  std::vector<int> pref_min(n), suf_max(n);
  pref_min[0] = a[0];
  for (int i = 1; i < n; ++i) pref_min[i] = std::min(pref_min[i - 1], a[i]);
  suf_max[n - 1] = a[n - 1];
  for (int i = n - 2; i >= 0; --i) suf_max[i] = std::max(suf_max[i + 1], a[i]);
  for (int c = 1; c <= n - 1; ++c)
    if (pref_min[c - 1] > suf_max[c]) res.push_back(c);
  return res;
}

bool is_irreducible(const PackedWord& w) {
  return !w.empty() && global_descents(w).empty();
}

std::vector<PackedWord> gd_decompose(const PackedWord& w) {
  std::vector<PackedWord> factors;
  if (w.empty()) return factors;
  const auto& a = w.letters();
  std::vector<int> cuts = global_descents(w);
  cuts.push_back(w.size());
  int begin = 0;
  for (int c : cuts) {
    Letters slice(a.begin() + begin, a.begin() + c);
    int m = 0;  // values below the slice: max over the suffix after the cut
    for (int i = c; i < w.size(); ++i) m = std::max(m, a[i]);
    for (int& x : slice) x -= m;
    factors.emplace_back(std::move(slice));
    begin = c;
  }
  return factors;
}

WordMultiset shuffle(const Letters& u, const Letters& v) {
  WordMultiset out;
  const int n = static_cast<int>(u.size()), m = static_cast<int>(v.size());
  Letters cur;
  cur.reserve(n + m);
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == n && j == m) {
      out[cur] += 1;
      return;
    }
    if (i < n) {
      cur.push_back(u[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < m) {
      cur.push_back(v[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

WordMultiset half_shuffle_left(const Letters& u, const Letters& v) {
  WordMultiset out;
  if (u.empty()) return out;
  Letters head(u.begin(), u.end() - 1);
  for (auto& [w, c] : shuffle(head, v)) {
    Letters r = w;
    r.push_back(u.back());
    out[r] += c;
  }
  return out;
}

WordMultiset half_shuffle_right(const Letters& u, const Letters& v) {
  WordMultiset out;
  if (v.empty()) return out;
  Letters head(v.begin(), v.end() - 1);
  for (auto& [w, c] : shuffle(u, head)) {
    Letters r = w;
    r.push_back(v.back());
    out[r] += c;
  }
  return out;
}

WordMultiset shifted_shuffle(const PackedWord& u, const PackedWord& v) {
  return shuffle(u.letters(), shift(v.letters(), u.max()));
}

namespace {

// All strictly increasing maps {1..a} -> subsets A of {1..M} drive the choices
// of u'; enumerate pairs (A, B) with A u B = {1..M} and emit u'.v'.
enum class ValKind { Shuffle, CShuffle, PrecM, SuccM, Prec, Succ };

std::vector<PackedWord> value_shuffle(const PackedWord& u, const PackedWord& v,
                                      ValKind kind) {
  std::vector<PackedWord> out;
  const int a = u.max(), b = v.max();
  if (u.empty() || v.empty()) {
    // conventions: shuffling with the empty word yields the other word,
    // except for the half operations which are empty on an empty side
    switch (kind) {
      case ValKind::Shuffle:
      case ValKind::CShuffle:
        if (u.empty() && v.empty()) return {};
        out.push_back(u.empty() ? v : u);
        return out;
      default:
        return {};
    }
  }
  const bool disjoint =
      kind == ValKind::CShuffle || kind == ValKind::Prec || kind == ValKind::Succ;
  // w = u'.v' is determined by the value sets A (for u') and B (for v'),
  // with A u B = {1..M}; the letters of u' are A applied to u, same for v'.
  auto next_comb = [](std::vector<int>& c, int kk, int n) {
    int i = kk - 1;
    while (i >= 0 && c[i] == n - kk + 1 + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < kk; ++j) c[j] = c[j - 1] + 1;
    return true;
  };
  for (int M = std::max(a, b); M <= a + b; ++M) {
    if (disjoint && M != a + b) continue;
    std::vector<int> A(a);
    for (int i = 0; i < a; ++i) A[i] = i + 1;
    do {
      std::vector<char> in_a(M + 1, 0);
      for (int x : A) in_a[x] = 1;
      std::vector<int> need;  // values B must contain
      for (int x = 1; x <= M; ++x)
        if (!in_a[x]) need.push_back(x);
      const int extra = b - static_cast<int>(need.size());
      if (extra < 0 || (disjoint && extra != 0)) continue;
      std::vector<int> pool;  // values of A that may repeat in B
      if (!disjoint)
        for (int x = 1; x <= M; ++x)
          if (in_a[x]) pool.push_back(x);
      if (extra > static_cast<int>(pool.size())) continue;
      std::vector<int> pick(extra);
      for (int i = 0; i < extra; ++i) pick[i] = i + 1;
      do {
        std::vector<int> B = need;
        for (int i = 0; i < extra; ++i) B.push_back(pool[pick[i] - 1]);
        std::sort(B.begin(), B.end());
        const int maxA = A.back();
        const int maxB = B.back();
        bool ok = true;
        switch (kind) {
          case ValKind::Shuffle:
          case ValKind::CShuffle: break;
          case ValKind::PrecM:
          case ValKind::Prec: ok = maxA > maxB; break;
          case ValKind::SuccM: ok = maxA <= maxB; break;
          case ValKind::Succ: ok = maxA < maxB; break;
        }
        if (ok) {
          Letters w;
          w.reserve(u.size() + v.size());
          for (int x : u.letters()) w.push_back(A[x - 1]);
          for (int x : v.letters()) w.push_back(B[x - 1]);
          out.emplace_back(std::move(w));
        }
      } while (next_comb(pick, extra, static_cast<int>(pool.size())));
    } while (next_comb(A, a, M));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<PackedWord> valshuffle(const PackedWord& u, const PackedWord& v) {
  return value_shuffle(u, v, ValKind::Shuffle);
}
std::vector<PackedWord> valcshuffle(const PackedWord& u, const PackedWord& v) {
  return value_shuffle(u, v, ValKind::CShuffle);
}
std::vector<PackedWord> valprecM(const PackedWord& u, const PackedWord& v) {
  return value_shuffle(u, v, ValKind::PrecM);
}
std::vector<PackedWord> valsuccM(const PackedWord& u, const PackedWord& v) {
  return value_shuffle(u, v, ValKind::SuccM);
}
std::vector<PackedWord> valprec(const PackedWord& u, const PackedWord& v) {
  return value_shuffle(u, v, ValKind::Prec);
}
std::vector<PackedWord> valsucc(const PackedWord& u, const PackedWord& v) {
  return value_shuffle(u, v, ValKind::Succ);
}

bool leq_star(const PackedWord& u, const PackedWord& v) {
  if (u.size() != v.size()) return false;
  if (standardize(u.letters()) != standardize(v.letters())) return false;
  const auto& a = u.letters();
  const auto& b = v.letters();
  std::map<int, int> img;
  for (int i = 0; i < u.size(); ++i) {
    auto [it, inserted] = img.emplace(a[i], b[i]);
    if (!inserted && it->second != b[i]) return false;
  }
  return true;
}

std::vector<std::set<int>> to_ordered_set_partition(const PackedWord& w) {
  std::vector<std::set<int>> blocks(w.max());
  for (int i = 1; i <= w.size(); ++i) blocks[w[i] - 1].insert(i);
  return blocks;
}

const std::vector<PackedWord>& enumerate_packed_words(int n) {
  static std::map<int, std::vector<PackedWord>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<PackedWord> out;
  Letters cur;
  std::vector<int> count(n + 2, 0);
  auto rec = [&](auto&& self, int maxv, int missing) -> void {
    const int rest = n - static_cast<int>(cur.size());
    if (missing > rest) return;
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = 1; x <= std::min(n, maxv + rest); ++x) {
      const int nmax = std::max(maxv, x);
      int nmissing = missing + std::max(0, x - maxv - 1);
      if (x <= maxv && count[x] == 0) --nmissing;
      cur.push_back(x);
      ++count[x];
      self(self, nmax, nmissing);
      --count[x];
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  auto [pos, ok] = cache.emplace(n, std::move(out));
  return pos->second;
}

}  // namespace wqsym
