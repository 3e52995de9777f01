#pragma once

#include <map>

#include "logsig/tensor.hpp"

namespace logsig {

// Formal sum of words with integer multiplicities.
using WordPoly = std::map<Word, long long>;

WordPoly shuffle(const Word& u, const Word& v);

void add_to(WordPoly& acc, const WordPoly& p, long long scale = 1);
WordPoly concat(const WordPoly& a, const WordPoly& b);
WordPoly bracket(const WordPoly& a, const WordPoly& b);
WordPoly single(const Word& w, long long c = 1);
void prune(WordPoly& p);

// Embed into a dense tensor (words longer than the depth are dropped).
GradedTensor to_tensor(const WordPoly& p, int d, int depth);

}  // namespace logsig
