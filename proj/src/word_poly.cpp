#include "logsig/word_poly.hpp"

namespace logsig {

namespace {

void shuffle_into(const Word& u, std::size_t iu, const Word& v, std::size_t iv, Word& cur, WordPoly& out) {
  if (iu == u.size() && iv == v.size()) {
    ++out[cur];
    return;
  }
  if (iu < u.size()) {
    cur.push_back(u[iu]);
    shuffle_into(u, iu + 1, v, iv, cur, out);
    cur.pop_back();
  }
  if (iv < v.size()) {
    cur.push_back(v[iv]);
    shuffle_into(u, iu, v, iv + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

WordPoly shuffle(const Word& u, const Word& v) {
  WordPoly out;
  Word cur;
  cur.reserve(u.size() + v.size());
  shuffle_into(u, 0, v, 0, cur, out);
  return out;
}

void prune(WordPoly& p) {
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
}

void add_to(WordPoly& acc, const WordPoly& p, long long scale) {
  for (const auto& [w, c] : p) acc[w] += scale * c;
  prune(acc);
}

WordPoly concat(const WordPoly& a, const WordPoly& b) {
  WordPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out[w] += ca * cb;
    }
  prune(out);
  return out;
}

WordPoly bracket(const WordPoly& a, const WordPoly& b) {
  WordPoly out = concat(a, b);
  add_to(out, concat(b, a), -1);
  return out;
}

WordPoly single(const Word& w, long long c) { return WordPoly{{w, c}}; }

GradedTensor to_tensor(const WordPoly& p, int d, int depth) {
  GradedTensor t(d, depth);
  for (const auto& [w, c] : p)
    if (static_cast<int>(w.size()) <= depth) t.at(w) += static_cast<double>(c);
  return t;
}

}  // namespace logsig
