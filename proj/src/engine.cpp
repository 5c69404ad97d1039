#include "engine.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "hkprod/errors.hpp"

namespace hkprod::detail {

std::uint64_t divisibility_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < m.size(); ++v) {
    auto e = m[v];
    for (unsigned t = 0; t < 8; ++t) {
      if (e < (1u << t)) break;
      mask |= std::uint64_t{1} << (v * 8 + t);
    }
  }
  return mask;
}

VecPoly canonicalize(VecPoly f, const PrimeField& field, const TermOrder& order) {
  std::sort(f.begin(), f.end(), [&](const VTerm& a, const VTerm& b) { return order(a, b) > 0; });
  VecPoly out;
  out.reserve(f.size());
  for (auto& t : f) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef = field.add(out.back().coef, t.coef);
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return out;
}

void make_monic(VecPoly& f, const PrimeField& field) {
  if (f.empty() || f.front().coef == 1) return;
  auto inv = field.inv(f.front().coef);
  for (auto& t : f) t.coef = field.mul(t.coef, inv);
}

VecPoly subtract_multiple(const VecPoly& f, std::size_t from, Coefficient c, const Monomial& m, const VecPoly& g,
                          const PrimeField& field, const TermOrder& order) {
  VecPoly out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from + 1, j = 1;
  const auto neg_c = field.neg(c);
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    auto cmp = order.compare(f[i].mono, f[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(VTerm{gm, g[j].comp, field.mul(neg_c, g[j].coef)});
      ++j;
    } else {
      auto s = field.add(f[i].coef, field.mul(neg_c, g[j].coef));
      if (s != 0) out.push_back(VTerm{gm, g[j].comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back(VTerm{g[j].mono * m, g[j].comp, field.mul(neg_c, g[j].coef)});
  return out;
}

void Reducer::add(VecPoly g) {
  if (g.empty()) throw std::logic_error("reducer element must be nonzero");
  make_monic(g, field_);
  masks_.push_back(divisibility_mask(g.front().mono));
  basis_.push_back(std::move(g));
}

std::optional<std::size_t> Reducer::find_reducer(const Monomial& m, std::uint32_t comp) const {
  const auto mask = divisibility_mask(m);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if ((masks_[k] & ~mask) != 0) continue;
    const auto& lt = basis_[k].front();
    if (lt.comp == comp && lt.mono.divides(m)) return k;
  }
  return std::nullopt;
}

VecPoly Reducer::reduce(VecPoly f) const {
  VecPoly remainder;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const auto& t = f[pos];
    auto k = find_reducer(t.mono, t.comp);
    if (!k) {
      remainder.push_back(t);
      ++pos;
      continue;
    }
    const auto& g = basis_[*k];
    Monomial m = g.front().mono.quotient_of(t.mono);
    f = subtract_multiple(f, pos, t.coef, m, g, field_, order_);
    pos = 0;
  }
  return remainder;
}

VecPoly s_polynomial(const VecPoly& f, const VecPoly& g, const PrimeField& field, const TermOrder& order) {
  const auto& lf = f.front();
  const auto& lg = g.front();
  Monomial l = lcm(lf.mono, lg.mono);
  Monomial mf = lf.mono.quotient_of(l);
  Monomial mg = lg.mono.quotient_of(l);
  // mf*f - mg*g with both leading terms cancelling; build mf*f tail then subtract.
  VecPoly scaled_f;
  scaled_f.reserve(f.size());
  for (const auto& t : f) scaled_f.push_back(VTerm{t.mono * mf, t.comp, t.coef});
  return subtract_multiple(scaled_f, 0, 1, mg, g, field, order);
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  std::uint64_t degree;
};

struct PairLess {
  const TermOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    auto c = order->compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class Buchberger {
 public:
  Buchberger(const PrimeField& field, const TermOrder& order, bool ideal_mode)
      : field_(field), order_(order), ideal_mode_(ideal_mode), pairs_(PairLess{&order_}) {}

  std::vector<VecPoly> run(std::vector<VecPoly> gens) {
    for (auto& g : gens) {
      auto r = reduce_active(std::move(g));
      if (!r.empty()) insert(std::move(r));
    }
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      auto s = s_polynomial(basis_[pr.i], basis_[pr.j], field_, order_);
      auto r = reduce_active(std::move(s));
      if (!r.empty()) insert(std::move(r));
    }
    return interreduce();
  }

 private:
  VecPoly reduce_active(VecPoly f) const {
    VecPoly remainder;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const auto& t = f[pos];
      auto k = find_active(t.mono, t.comp);
      if (!k) {
        remainder.push_back(t);
        ++pos;
        continue;
      }
      const auto& g = basis_[*k];
      Monomial m = g.front().mono.quotient_of(t.mono);
      f = subtract_multiple(f, pos, t.coef, m, g, field_, order_);
      pos = 0;
    }
    make_monic(remainder, field_);
    return remainder;
  }

  std::optional<std::size_t> find_active(const Monomial& m, std::uint32_t comp) const {
    const auto mask = divisibility_mask(m);
    for (auto k : active_) {
      if ((masks_[k] & ~mask) != 0) continue;
      const auto& lt = basis_[k].front();
      if (lt.comp == comp && lt.mono.divides(m)) return k;
    }
    return std::nullopt;
  }

  bool is_coprime(std::size_t a, std::size_t b) const {
    return ideal_mode_ && coprime(basis_[a].front().mono, basis_[b].front().mono);
  }

  // Gebauer-Moeller update.
  void insert(VecPoly h) {
    const std::size_t t = basis_.size();
    masks_.push_back(divisibility_mask(h.front().mono));
    basis_.push_back(std::move(h));
    const auto& lt_h = basis_[t].front();

    std::vector<Pair> candidates;
    for (auto k : active_) {
      const auto& lt_k = basis_[k].front();
      if (lt_k.comp != lt_h.comp) continue;
      Monomial l = lcm(lt_k.mono, lt_h.mono);
      candidates.push_back(Pair{k, t, l, lt_h.comp, l.degree()});
    }

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& pa = candidates[a];
      bool drop = false;
      if (!is_coprime(pa.i, t)) {
        for (std::size_t b = a + 1; b < candidates.size() && !drop; ++b)
          drop = candidates[b].lcm.divides(pa.lcm);
        for (std::size_t b = 0; b < kept.size() && !drop; ++b) drop = kept[b].lcm.divides(pa.lcm);
      }
      if (!drop) kept.push_back(pa);
    }

    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const auto& p = *it;
      if (p.comp == lt_h.comp && lt_h.mono.divides(p.lcm) &&
          !(lcm(basis_[p.i].front().mono, lt_h.mono) == p.lcm) &&
          !(lcm(basis_[p.j].front().mono, lt_h.mono) == p.lcm)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }

    for (auto& p : kept)
      if (!is_coprime(p.i, t)) pairs_.insert(std::move(p));

    std::vector<std::size_t> still_active;
    for (auto k : active_) {
      const auto& lt_k = basis_[k].front();
      if (!(lt_k.comp == lt_h.comp && lt_h.mono.divides(lt_k.mono))) still_active.push_back(k);
    }
    still_active.push_back(t);
    active_ = std::move(still_active);
  }

  std::vector<VecPoly> interreduce() const {
    std::vector<VecPoly> minimal;
    for (auto k : active_) minimal.push_back(basis_[k]);
    std::sort(minimal.begin(), minimal.end(),
              [&](const VecPoly& a, const VecPoly& b) { return order_(a.front(), b.front()) > 0; });
    std::vector<VecPoly> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Reducer others(field_, order_);
      for (std::size_t o = 0; o < minimal.size(); ++o)
        if (o != k) others.add(minimal[o]);
      VecPoly tail(minimal[k].begin() + 1, minimal[k].end());
      VecPoly r = others.reduce(std::move(tail));
      VecPoly g;
      g.reserve(r.size() + 1);
      g.push_back(minimal[k].front());
      g.insert(g.end(), r.begin(), r.end());
      reduced.push_back(std::move(g));
    }
    return reduced;
  }

  PrimeField field_;
  const TermOrder& order_;
  bool ideal_mode_;
  std::vector<VecPoly> basis_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::size_t> active_;
  std::set<Pair, PairLess> pairs_;
};

}  // namespace

std::vector<VecPoly> compute_groebner(std::vector<VecPoly> gens, const PrimeField& field, const TermOrder& order,
                                      bool ideal_mode) {
  for (auto& g : gens) g = canonicalize(std::move(g), field, order);
  std::erase_if(gens, [](const VecPoly& g) { return g.empty(); });
  return Buchberger(field, order, ideal_mode).run(std::move(gens));
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("standard monomial count overflow");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("standard monomial count overflow");
  return r;
}

bool is_one_prefix(const Monomial& m, std::size_t k) {
  for (std::size_t v = 0; v < k; ++v)
    if (m[v] != 0) return false;
  return true;
}

// Pure-power bound of variable v among the first k coordinates.
std::optional<Monomial::Exponent> pure_power_bound(const std::vector<Monomial>& gens, std::size_t v, std::size_t k) {
  std::optional<Monomial::Exponent> best;
  for (const auto& g : gens) {
    bool pure = g[v] > 0;
    for (std::size_t u = 0; u < k && pure; ++u)
      if (u != v && g[u] != 0) pure = false;
    if (pure && (!best || g[v] < *best)) best = g[v];
  }
  return best;
}

std::uint64_t count_slices(const std::vector<Monomial>& gens, std::size_t k) {
  for (const auto& g : gens)
    if (is_one_prefix(g, k)) return 0;
  if (k == 0) return 1;
  const std::size_t v = k - 1;
  const auto bound = *pure_power_bound(gens, v, k);
  std::vector<Monomial::Exponent> breaks{0};
  for (const auto& g : gens)
    if (g[v] < bound) breaks.push_back(g[v]);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < breaks.size(); ++s) {
    const auto lo = breaks[s];
    const auto hi = s + 1 < breaks.size() ? breaks[s + 1] : bound;
    std::vector<Monomial> slice;
    for (const auto& g : gens) {
      if (g[v] > lo) continue;
      Monomial projected = g;
      projected[v] = 0;
      slice.push_back(projected);
    }
    total = checked_add(total, checked_mul(hi - lo, count_slices(slice, k - 1)));
  }
  return total;
}

}  // namespace

std::optional<std::uint64_t> count_standard(const std::vector<Monomial>& gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.is_one()) return 0;
  for (std::size_t v = 0; v < nvars; ++v)
    if (!pure_power_bound(gens, v, nvars)) return std::nullopt;
  return count_slices(gens, nvars);
}

std::optional<std::vector<Monomial>> enumerate_standard(const std::vector<Monomial>& gens, std::size_t nvars) {
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (g.is_one()) return out;
  std::vector<Monomial::Exponent> bounds(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    auto b = pure_power_bound(gens, v, nvars);
    if (!b) return std::nullopt;
    bounds[v] = *b;
  }
  Monomial m(nvars);
  for (;;) {
    bool divisible = false;
    for (const auto& g : gens)
      if (g.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(m);
    std::size_t v = 0;
    while (v < nvars) {
      if (++m[v] < bounds[v]) break;
      m[v] = 0;
      ++v;
    }
    if (v == nvars) break;
  }
  return out;
}

}  // namespace hkprod::detail
