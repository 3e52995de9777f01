#include "logsig/free_lie.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

namespace logsig {

namespace {

const std::array<double, kBernoulliCache + 1>& bernoulli_table() {
  static const auto table = [] {
    std::array<double, kBernoulliCache + 1> b{};
    // B_{2n} = (-1)^{n+1} 2 (2n)! zeta(2n) / (2 pi)^{2n}; the additive recurrence loses digits fast.
    b[0] = 1.0;
    b[1] = -0.5;
    double fact = 1.0;
    for (int m = 2; m <= kBernoulliCache; ++m) {
      fact *= m;
      if (m % 2 == 1) continue;
      const double sign = (m / 2) % 2 == 1 ? 1.0 : -1.0;
      b[m] = sign * 2.0 * fact * std::riemann_zeta(static_cast<double>(m)) / std::pow(2.0 * std::numbers::pi, m);
    }
    return b;
  }();
  return table;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double bernoulli(int m) {
  if (m < 0 || m > kBernoulliCache) throw DomainError("Bernoulli index outside the cached range");
  return bernoulli_table()[m];
}

GradedTensor bch(const GradedTensor& v, const GradedTensor& w) { return log_t(mul(exp_t(v), exp_t(w))); }

GradedTensor ad_letter_power(int w_letter, const GradedTensor& v, int m) {
  GradedTensor e = GradedTensor::letter(v.dim(), v.depth(), w_letter);
  GradedTensor r = v;
  for (int i = 0; i < m; ++i) r = commutator(e, r);
  return r;
}

GradedTensor hausdorff_h1(const GradedTensor& v, int w_letter) {
  GradedTensor e = GradedTensor::letter(v.dim(), v.depth(), w_letter);
  GradedTensor term = v;
  GradedTensor out = v;
  for (int m = 1; m <= v.depth(); ++m) {
    term = commutator(e, term);
    if (max_abs(term) == 0.0) break;
    const double b = bernoulli(m);
    if (b != 0.0) out += (b / factorial(m)) * term;
  }
  return out;
}

namespace {

// Nonzero-descendant markers for the prefix tree of a tensor.
std::vector<std::vector<char>> live_prefixes(const GradedTensor& t) {
  const int k = t.dim();
  std::vector<std::vector<char>> live(t.depth() + 1);
  for (int L = 0; L <= t.depth(); ++L) live[L].assign(t.level_size(L), 0);
  for (int n = 0; n <= t.depth(); ++n) {
    auto lvl = t.level(n);
    for (std::size_t i = 0; i < lvl.size(); ++i) {
      if (lvl[i] == cplx{}) continue;
      std::size_t mod = 1;
      for (int L = 0; L <= n; ++L, mod *= k) live[L][i % mod] = 1;
    }
  }
  return live;
}

void substitute_dfs(const GradedTensor& sym, const std::vector<GradedTensor>& images,
                    const std::vector<std::vector<char>>& live, int len, std::size_t idx, std::size_t place,
                    const GradedTensor& prod, GradedTensor& out) {
  const cplx c = sym.level(len)[idx];
  if (c != cplx{}) out += c * prod;
  if (len == sym.depth()) return;
  const int k = sym.dim();
  for (int s = 0; s < k; ++s) {
    const std::size_t child = idx + place * s;
    if (!live[len + 1][child]) continue;
    GradedTensor next = mul(prod, images[s]);
    if (max_abs(next) == 0.0) continue;
    substitute_dfs(sym, images, live, len + 1, child, place * k, next, out);
  }
}

struct SdpContext {
  const std::vector<GradedTensor>& As;
  int letter;
  int depth;
  int d;
  unsigned full;
  GradedTensor& out;
};

void sdp_dfs(SdpContext& ctx, const Word& w, std::size_t pos, cplx coeff, std::size_t idx, std::size_t place,
             int len, unsigned used) {
  if (pos == w.size()) {
    if (used == ctx.full) ctx.out.level(len)[idx] += coeff;
    return;
  }
  const int a = w[pos];
  if (len + 1 <= ctx.depth)
    sdp_dfs(ctx, w, pos + 1, coeff, idx + place * a, place * ctx.d, len + 1, used);
  if (a != ctx.letter) return;
  for (std::size_t j = 0; j < ctx.As.size(); ++j) {
    if (used & (1u << j)) continue;
    const GradedTensor& A = ctx.As[j];
    std::size_t sub_place = 1;
    for (int l = 0; l + len <= ctx.depth && l <= A.depth(); ++l, sub_place *= ctx.d) {
      auto lvl = A.level(l);
      for (std::size_t ia = 0; ia < lvl.size(); ++ia) {
        if (lvl[ia] == cplx{}) continue;
        sdp_dfs(ctx, w, pos + 1, coeff * lvl[ia], idx + place * ia, place * sub_place, len + l,
                used | (1u << j));
      }
    }
  }
}

}  // namespace

GradedTensor substitute(const GradedTensor& symbolic, const std::vector<GradedTensor>& images) {
  if (images.empty() || static_cast<int>(images.size()) != symbolic.dim())
    throw ShapeError("one image per symbol is required");
  for (const auto& im : images) {
    check_same_shape(im, images.front());
    if (std::abs(im.scalar()) != 0.0) throw DomainError("substituted images need a zero scalar component");
  }
  GradedTensor out(images.front().dim(), images.front().depth());
  const auto live = live_prefixes(symbolic);
  GradedTensor unit = GradedTensor::unit(out.dim(), out.depth());
  substitute_dfs(symbolic, images, live, 0, 0, 1, unit, out);
  return out;
}

GradedTensor symmetrized_derivation_product(const std::vector<GradedTensor>& As, const GradedTensor& target,
                                            int letter) {
  if (As.size() > 16) throw DomainError("too many derivation factors");
  for (const auto& A : As)
    if (A.dim() != target.dim()) throw ShapeError("factor alphabet differs from target alphabet");
  GradedTensor out(target.dim(), target.depth());
  SdpContext ctx{As, letter, target.depth(), target.dim(), (1u << As.size()) - 1u, out};
  for (int n = 0; n <= target.depth(); ++n) {
    auto lvl = target.level(n);
    for (std::size_t i = 0; i < lvl.size(); ++i) {
      if (lvl[i] == cplx{}) continue;
      sdp_dfs(ctx, index_word(i, n, target.dim()), 0, lvl[i], 0, 1, 0, 0);
    }
  }
  return out;
}

GradedTensor hausdorff_hn(int n, const GradedTensor& v, int w_letter) {
  if (n < 0) throw DomainError("Hausdorff index must be non-negative");
  if (std::abs(v.scalar()) != 0.0) throw DomainError("v needs a zero scalar component");
  const int N = v.depth();
  // Symbols: 0 stands for v, 1 for w.
  GradedTensor w_sym = GradedTensor::letter(2, N, 1);
  GradedTensor h1_sym = hausdorff_h1(GradedTensor::letter(2, N, 0), 1);
  GradedTensor t = w_sym;
  for (int i = 0; i < n; ++i) t = symmetrized_derivation_product({h1_sym}, t, 1);
  t *= 1.0 / factorial(n);
  return substitute(t, {v, GradedTensor::letter(v.dim(), N, w_letter)});
}

namespace {

GradedTensor h1_symbol(int n, int depth, int i) {
  return hausdorff_h1(GradedTensor::letter(n + 1, depth, i), 0);
}

void set_partitions(const std::vector<int>& items, std::size_t pos, std::vector<std::vector<int>>& blocks,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (pos == items.size()) {
    out.push_back(blocks);
    return;
  }
  for (auto& b : blocks) {
    b.push_back(items[pos]);
    set_partitions(items, pos + 1, blocks, out);
    b.pop_back();
  }
  blocks.push_back({items[pos]});
  set_partitions(items, pos + 1, blocks, out);
  blocks.pop_back();
}

GradedTensor hn_recursive_memo(const std::vector<int>& idx, int n, int depth,
                               std::map<std::vector<int>, GradedTensor>& memo) {
  if (auto it = memo.find(idx); it != memo.end()) return it->second;
  const int l = static_cast<int>(idx.size());
  GradedTensor last = h1_symbol(n, depth, idx.back());
  GradedTensor result(n + 1, depth);
  if (l == 1) {
    result = last;
  } else {
    std::vector<int> head(idx.begin(), idx.end() - 1);
    std::vector<std::vector<std::vector<int>>> parts;
    std::vector<std::vector<int>> blocks;
    set_partitions(head, 0, blocks, parts);
    for (const auto& P : parts) {
      std::vector<GradedTensor> As;
      double weight = 1.0 / factorial(l);
      for (const auto& block : P) {
        As.push_back(hn_recursive_memo(block, n, depth, memo));
        weight *= factorial(static_cast<int>(block.size()));
      }
      result += weight * symmetrized_derivation_product(As, last, 0);
    }
  }
  memo.emplace(idx, result);
  return result;
}

}  // namespace

GradedTensor hn_vector_direct(int n, int depth) {
  if (n < 1 || n + 1 > kMaxAlphabet) throw DomainError("vector Hausdorff order outside [1, 7]");
  GradedTensor t = GradedTensor::letter(n + 1, depth, 0);
  for (int i = n; i >= 1; --i) t = symmetrized_derivation_product({h1_symbol(n, depth, i)}, t, 0);
  t *= 1.0 / factorial(n);
  return t;
}

GradedTensor hn_vector_recursive(int n, int depth) {
  if (n < 1 || n + 1 > kMaxAlphabet) throw DomainError("vector Hausdorff order outside [1, 7]");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 1);
  std::map<std::vector<int>, GradedTensor> memo;
  return hn_recursive_memo(idx, n, depth, memo);
}

WordPoly right_nested_bracket_poly(const Word& J) {
  if (J.empty()) throw DomainError("bracket of an empty word");
  WordPoly acc = single({J.back()});
  for (std::size_t i = J.size() - 1; i-- > 0;) acc = bracket(single({J[i]}), acc);
  return acc;
}

GradedTensor right_nested_bracket(const Word& J, int d, int depth) {
  return to_tensor(right_nested_bracket_poly(J), d, depth);
}

WordPoly liemon_expand(const Word& J) {
  const int m = static_cast<int>(J.size());
  if (m < 2) throw DomainError("Lie monomial expansion needs at least two letters");
  const WordPoly tail = bracket(single({J[m - 2]}), single({J[m - 1]}));
  WordPoly out;
  for (unsigned K = 0; K < (1u << (m - 2)); ++K) {
    Word front, back;
    for (int p = 0; p < m - 2; ++p) ((K >> p) & 1u ? back : front).push_back(J[p]);
    std::reverse(back.begin(), back.end());
    const long long sign = std::popcount(K) % 2 == 0 ? 1 : -1;
    add_to(out, concat(concat(single(front), tail), single(back)), sign);
  }
  return out;
}

int descent_count(const Permutation& sigma) {
  int e = 0;
  for (std::size_t j = 0; j + 1 < sigma.size(); ++j)
    if (sigma[j] > sigma[j + 1]) ++e;
  return e;
}

double chen_strichartz_coeff(const Permutation& sigma) {
  const int m = static_cast<int>(sigma.size());
  const int e = descent_count(sigma);
  double binom = 1.0;
  for (int i = 0; i < e; ++i) binom = binom * (m - 1 - i) / (i + 1);
  return (e % 2 == 0 ? 1.0 : -1.0) / (static_cast<double>(m) * m * binom);
}

std::vector<Permutation> all_permutations(int m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

void check_shuffle_args(const std::vector<cplx>& c, int s) {
  const int R = static_cast<int>(c.size()) - 1;
  if (R < 1 || s < 0 || s > R) throw DomainError("need 0 <= s <= R with R + 1 inputs");
}

cplx checked_inverse(cplx z, double scale) {
  if (std::abs(z) <= 1e-14 * scale) throw DomainError("singular input: vanishing sum in a denominator");
  return 1.0 / z;
}

double input_scale(const std::vector<cplx>& c) {
  double s = 0.0;
  for (const auto& z : c) s = std::max(s, std::abs(z));
  return std::max(s, 1e-300);
}

}  // namespace

cplx consecutive_shuffle_sum(const std::vector<cplx>& c, int s) {
  check_shuffle_args(c, s);
  const int R = static_cast<int>(c.size()) - 1;
  const double scale = input_scale(c);
  cplx total = 0.0;
  // Values 2..R+1 split into the decreasing head (positions 1..s) and the increasing tail.
  for (unsigned mask = 0; mask < (1u << R); ++mask) {
    if (std::popcount(mask) != s) continue;
    std::vector<int> head, tail;
    for (int v = 0; v < R; ++v) ((mask >> v) & 1u ? head : tail).push_back(v + 2);
    std::vector<int> eta(R + 2);  // 1-based positions
    for (int p = 1; p <= s; ++p) eta[p] = head[s - p];
    eta[s + 1] = 1;
    for (int p = s + 2; p <= R + 1; ++p) eta[p] = tail[p - s - 2];
    std::vector<int> inv_eta(R + 2);
    for (int p = 1; p <= R + 1; ++p) inv_eta[eta[p]] = p;
    cplx denom = 1.0, partial = 0.0;
    for (int k = 2; k <= R + 1; ++k) {
      partial += c[inv_eta[k] - 1];
      denom *= checked_inverse(partial, scale);
    }
    total += denom;
  }
  return total;
}

cplx consecutive_shuffle_closed(const std::vector<cplx>& c, int s) {
  check_shuffle_args(c, s);
  const int R = static_cast<int>(c.size()) - 1;
  const double scale = input_scale(c);
  cplx r = 1.0;
  for (int k = 1; k <= s; ++k) {
    cplx sum = 0.0;
    for (int j = k; j <= s; ++j) sum += c[j - 1];
    r *= checked_inverse(sum, scale);
  }
  for (int k = s + 2; k <= R + 1; ++k) {
    cplx sum = 0.0;
    for (int j = s + 2; j <= k; ++j) sum += c[j - 1];
    r *= checked_inverse(sum, scale);
  }
  return r;
}

namespace {

std::vector<cplx> right_bracket_level(std::span<const cplx> p, int n, int d) {
  if (n <= 1) return {p.begin(), p.end()};
  const std::size_t sub = ipow(d, n - 1);
  std::vector<cplx> out(p.size(), cplx{});
  for (int a = 0; a < d; ++a) {
    std::vector<cplx> pa(sub);
    for (std::size_t j = 0; j < sub; ++j) pa[j] = p[a + static_cast<std::size_t>(d) * j];
    auto r = right_bracket_level(pa, n - 1, d);
    for (std::size_t j = 0; j < sub; ++j) {
      out[a + static_cast<std::size_t>(d) * j] += r[j];
      out[j + sub * a] -= r[j];
    }
  }
  return out;
}

}  // namespace

GradedTensor dynkin_map(const GradedTensor& x) {
  GradedTensor out(x.dim(), x.depth());
  for (int n = 1; n <= x.depth(); ++n) {
    auto r = right_bracket_level(x.level(n), n, x.dim());
    std::copy(r.begin(), r.end(), out.level(n).begin());
  }
  return out;
}

LieTest dynkin_is_lie(const GradedTensor& x, double tol) {
  GradedTensor r = dynkin_map(x);
  double worst = std::abs(x.scalar());
  for (int n = 1; n <= x.depth(); ++n) {
    auto rl = r.level(n);
    auto xl = x.level(n);
    for (std::size_t i = 0; i < xl.size(); ++i) worst = std::max(worst, std::abs(rl[i] - static_cast<double>(n) * xl[i]));
  }
  return {worst <= tol, worst};
}

NeoSides neo_classical_sides(int p, int m) {
  if (p < 1 || m < 0) throw DomainError("need p >= 1 and m >= 0");
  const double pp = p;
  double lhs = 0.0;
  for (int i = 0; i <= m; ++i) lhs += 1.0 / (std::tgamma(i / pp + 1.0) * std::tgamma((m - i) / pp + 1.0));
  const double rhs = pp * std::pow(2.0, m / pp) / std::tgamma(m / pp + 1.0);
  return {lhs, rhs};
}

}  // namespace logsig
