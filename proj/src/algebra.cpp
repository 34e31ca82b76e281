#include "wqsym/algebra.hpp"

#include <algorithm>
#include <mutex>

namespace wqsym {

namespace {

void require_positive_degree(const Elem& x) {
  for (const auto& [w, c] : x.terms())
    if (w.empty())
      throw std::invalid_argument("operation restricted to positive degree");
}

Elem word_prec(BasisTag tag, const PackedWord& u, const PackedWord& v) {
  Elem out(tag);
  switch (tag) {
    case BasisTag::M:
      for (const PackedWord& w : valprecM(u, v)) out.add_term(w, 1);
      break;
    case BasisTag::Q:
      for (const PackedWord& w : valprec(u, v)) out.add_term(w, 1);
      break;
    case BasisTag::R:
      for (const auto& [w, c] : half_shuffle_left(u.letters(), shift(v.letters(), u.max())))
        out.add_term(PackedWord(w), c);
      break;
    default:
      throw std::invalid_argument("products live in the M, Q or R basis");
  }
  return out;
}

Elem word_succ(BasisTag tag, const PackedWord& u, const PackedWord& v) {
  Elem out(tag);
  switch (tag) {
    case BasisTag::M:
      for (const PackedWord& w : valsuccM(u, v)) out.add_term(w, 1);
      break;
    case BasisTag::Q:
      for (const PackedWord& w : valsucc(u, v)) out.add_term(w, 1);
      break;
    case BasisTag::R:
      for (const auto& [w, c] : half_shuffle_right(u.letters(), shift(v.letters(), u.max())))
        out.add_term(PackedWord(w), c);
      break;
    default:
      throw std::invalid_argument("products live in the M, Q or R basis");
  }
  return out;
}

Tensor2 word_copr_prec(BasisTag tag, const PackedWord& u) {
  Tensor2 out(tag);
  const int n = u.size();
  if (tag == BasisTag::M || tag == BasisTag::Q) {
    const int last = n > 0 ? u[n] : 1;
    for (int i = last; i <= u.max() - 1; ++i)
      out.add_term({restrict_le(u, i), pack(restrict_gt(u, i))}, 1);
    return out;
  }
  if (tag != BasisTag::R)
    throw std::invalid_argument("coproducts live in the M, Q or R basis");
  // cut at or after the last occurrence of the maximum, support-disjoint parts
  int k = 0;
  for (int i = 1; i <= n; ++i)
    if (u[i] == u.max()) k = i;
  for (int i = std::max(k, 1); i <= n - 1; ++i) {
    std::set<int> left(u.letters().begin(), u.letters().begin() + i);
    bool disjoint = true;
    for (int j = i + 1; j <= n && disjoint; ++j)
      if (left.count(u[j])) disjoint = false;
    if (!disjoint) continue;
    Letters a(u.letters().begin(), u.letters().begin() + i);
    Letters b(u.letters().begin() + i, u.letters().end());
    out.add_term({pack(a), pack(b)}, 1);
  }
  return out;
}

Tensor2 word_copr_succ(BasisTag tag, const PackedWord& u) {
  Tensor2 out(tag);
  const int n = u.size();
  if (tag == BasisTag::M || tag == BasisTag::Q) {
    const int last = n > 0 ? u[n] : 1;
    for (int i = 1; i <= last - 1; ++i)
      out.add_term({restrict_le(u, i), pack(restrict_gt(u, i))}, 1);
    return out;
  }
  if (tag != BasisTag::R)
    throw std::invalid_argument("coproducts live in the M, Q or R basis");
  // cut strictly before the first occurrence of the maximum
  int k = n + 1;
  for (int i = n; i >= 1; --i)
    if (u[i] == u.max()) k = i;
  for (int i = 1; i <= k - 1; ++i) {
    std::set<int> left(u.letters().begin(), u.letters().begin() + i);
    bool disjoint = true;
    for (int j = i + 1; j <= n && disjoint; ++j)
      if (left.count(u[j])) disjoint = false;
    if (!disjoint) continue;
    Letters a(u.letters().begin(), u.letters().begin() + i);
    Letters b(u.letters().begin() + i, u.letters().end());
    out.add_term({pack(a), pack(b)}, 1);
  }
  return out;
}

}  // namespace

Elem half_prec(const Elem& x, const Elem& y) {
  require_positive_degree(x);
  require_positive_degree(y);
  if (!x.terms().empty() && !y.terms().empty() && x.basis() != y.basis())
    throw std::invalid_argument("basis mismatch");
  Elem out(x.basis());
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) {
      Elem t = word_prec(x.basis(), u, v);
      t *= cu * cv;
      out += t;
    }
  return out;
}

Elem half_succ(const Elem& x, const Elem& y) {
  require_positive_degree(x);
  require_positive_degree(y);
  if (!x.terms().empty() && !y.terms().empty() && x.basis() != y.basis())
    throw std::invalid_argument("basis mismatch");
  Elem out(x.basis());
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) {
      Elem t = word_succ(x.basis(), u, v);
      t *= cu * cv;
      out += t;
    }
  return out;
}

Elem full_product(const Elem& x, const Elem& y) {
  return half_prec(x, y) + half_succ(x, y);
}

Tensor2 copr_prec(const Elem& x) {
  require_positive_degree(x);
  Tensor2 out(x.basis());
  for (const auto& [u, c] : x.terms()) {
    Tensor2 t = word_copr_prec(x.basis(), u);
    t *= c;
    out += t;
  }
  return out;
}

Tensor2 copr_succ(const Elem& x) {
  require_positive_degree(x);
  Tensor2 out(x.basis());
  for (const auto& [u, c] : x.terms()) {
    Tensor2 t = word_copr_succ(x.basis(), u);
    t *= c;
    out += t;
  }
  return out;
}

Tensor2 reduced_coproduct(const Elem& x) { return copr_prec(x) + copr_succ(x); }

Elem q_to_m(const PackedWord& u) {
  Elem out(BasisTag::M);
  for (const PackedWord& v : enumerate_packed_words(u.size()))
    if (leq_star(u, v)) out.add_term(v, 1);
  return out;
}

Elem m_to_q(const PackedWord& u) {
  static std::map<PackedWord, Elem> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(u);
    if (it != cache.end()) return it->second;
  }
  Elem out(BasisTag::Q, u);
  for (const PackedWord& v : enumerate_packed_words(u.size()))
    if (v != u && leq_star(u, v)) out -= m_to_q(v);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(u, std::move(out)).first->second;
}

Elem convert(const Elem& x, BasisTag target) {
  if (x.basis() == target) return x;
  Elem out(target);
  for (const auto& [w, c] : x.terms()) {
    Elem t;
    if (x.basis() == BasisTag::Q && target == BasisTag::M)
      t = q_to_m(w);
    else if (x.basis() == BasisTag::M && target == BasisTag::Q)
      t = m_to_q(w);
    else
      throw std::invalid_argument("unsupported basis conversion");
    t *= c;
    out += t;
  }
  return out;
}

Int pairing(const Elem& r_side, const Elem& q_side) {
  if (!r_side.terms().empty() && r_side.basis() != BasisTag::R)
    throw std::invalid_argument("pairing expects an R-side element");
  if (!q_side.terms().empty() && q_side.basis() != BasisTag::Q)
    throw std::invalid_argument("pairing expects a Q-side element");
  Int s = 0;
  for (const auto& [w, c] : r_side.terms()) s += c * q_side.coeff(w);
  return s;
}

Int pairing2(const Tensor2& r_side, const Tensor2& q_side) {
  Int s = 0;
  for (const auto& [k, c] : r_side.terms()) s += c * q_side.coeff(k);
  return s;
}

bool check_dendriform(const Elem& a, const Elem& b, const Elem& c) {
  // (a < b) < c = a < (bc),  (a > b) < c = a > (b < c),  (ab) > c = a > (b > c)
  const bool first = half_prec(half_prec(a, b), c) == half_prec(a, full_product(b, c));
  const bool second = half_prec(half_succ(a, b), c) == half_succ(a, half_prec(b, c));
  const bool third = half_succ(full_product(a, b), c) == half_succ(a, half_succ(b, c));
  return first && second && third;
}

namespace {

enum class Half { Prec, Succ };

Tensor2 copr(Half h, const Elem& x) { return h == Half::Prec ? copr_prec(x) : copr_succ(x); }

// (Delta_h tensor Id) applied to a rank-2 tensor.
Tensor3 copr_left(Half h, const Tensor2& t) {
  Tensor3 out(t.basis());
  for (const auto& [k, c] : t.terms()) {
    Tensor2 d = copr(h, Elem(t.basis(), k.first));
    for (const auto& [p, cc] : d.terms())
      out.add_term({p.first, p.second, k.second}, c * cc);
  }
  return out;
}

// (Id tensor Delta_h) applied to a rank-2 tensor.
Tensor3 copr_right(Half h, const Tensor2& t) {
  Tensor3 out(t.basis());
  for (const auto& [k, c] : t.terms()) {
    Tensor2 d = copr(h, Elem(t.basis(), k.second));
    for (const auto& [p, cc] : d.terms())
      out.add_term({k.first, p.first, p.second}, c * cc);
  }
  return out;
}

using Binary = Elem (*)(const Elem&, const Elem&);

// Sum over tensor terms of f(x1, y1) tensor g(x2, y2).
Tensor2 combine(const Tensor2& x, const Tensor2& y, Binary f, Binary g) {
  Tensor2 out(x.basis());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      Elem left = f(Elem(x.basis(), kx.first), Elem(y.basis(), ky.first));
      Elem right = g(Elem(x.basis(), kx.second), Elem(y.basis(), ky.second));
      Tensor2 t = tensor(left, right);
      t *= cx * cy;
      out += t;
    }
  return out;
}

}  // namespace

bool check_codendriform(const Elem& a) {
  // the duals of the three product axioms, on rank-3 tensors
  const Tensor2 dp = copr_prec(a), ds = copr_succ(a);
  const bool first = copr_left(Half::Prec, dp) ==
                     copr_right(Half::Prec, dp) + copr_right(Half::Succ, dp);
  const bool second = copr_left(Half::Succ, dp) == copr_right(Half::Prec, ds);
  const bool third = copr_left(Half::Prec, ds) + copr_left(Half::Succ, ds) ==
                     copr_right(Half::Succ, ds);
  return first && second && third;
}

bool check_bidendriform(const Elem& a, const Elem& b) {
  const BasisTag tag = a.basis();
  const Tensor2 da = reduced_coproduct(a);
  const Tensor2 bp = copr_prec(b), bs = copr_succ(b);

  auto cross = [&](const Tensor2& x, const Tensor2& y, Binary f, Binary g) {
    return combine(x, y, f, g);
  };

  // D_succ(a > b) = a'b'_s (x) a'' > b''_s + b'_s (x) a > b''_s
  //                 + a b'_s (x) b''_s + a' (x) a'' > b + a (x) b
  {
    Tensor2 lhs = copr_succ(half_succ(a, b));
    Tensor2 rhs = cross(da, bs, &full_product, &half_succ);
    for (const auto& [k, c] : bs.terms()) {
      rhs += Int(c) * tensor(Elem(tag, k.first), half_succ(a, Elem(tag, k.second)));
      rhs += Int(c) * tensor(full_product(a, Elem(tag, k.first)), Elem(tag, k.second));
    }
    for (const auto& [k, c] : da.terms())
      rhs += Int(c) * tensor(Elem(tag, k.first), half_succ(Elem(tag, k.second), b));
    rhs += tensor(a, b);
    if (!(lhs == rhs)) return false;
  }
  // D_succ(a < b) = a'b'_s (x) a'' < b''_s + b'_s (x) a < b''_s + a' (x) a'' < b
  {
    Tensor2 lhs = copr_succ(half_prec(a, b));
    Tensor2 rhs = cross(da, bs, &full_product, &half_prec);
    for (const auto& [k, c] : bs.terms())
      rhs += Int(c) * tensor(Elem(tag, k.first), half_prec(a, Elem(tag, k.second)));
    for (const auto& [k, c] : da.terms())
      rhs += Int(c) * tensor(Elem(tag, k.first), half_prec(Elem(tag, k.second), b));
    if (!(lhs == rhs)) return false;
  }
  // D_prec(a > b) = a'b'_p (x) a'' > b''_p + b'_p (x) a > b''_p + a b'_p (x) b''_p
  {
    Tensor2 lhs = copr_prec(half_succ(a, b));
    Tensor2 rhs = cross(da, bp, &full_product, &half_succ);
    for (const auto& [k, c] : bp.terms()) {
      rhs += Int(c) * tensor(Elem(tag, k.first), half_succ(a, Elem(tag, k.second)));
      rhs += Int(c) * tensor(full_product(a, Elem(tag, k.first)), Elem(tag, k.second));
    }
    if (!(lhs == rhs)) return false;
  }
  // D_prec(a < b) = a'b'_p (x) a'' < b''_p + b'_p (x) a < b''_p
  //                 + a'b (x) a'' + b (x) a
  {
    Tensor2 lhs = copr_prec(half_prec(a, b));
    Tensor2 rhs = cross(da, bp, &full_product, &half_prec);
    for (const auto& [k, c] : bp.terms())
      rhs += Int(c) * tensor(Elem(tag, k.first), half_prec(a, Elem(tag, k.second)));
    for (const auto& [k, c] : da.terms())
      rhs += Int(c) * tensor(full_product(Elem(tag, k.first), b), Elem(tag, k.second));
    rhs += tensor(b, a);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace wqsym
