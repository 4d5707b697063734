//
// Copyright 2026 The LeakAudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef LEAKAUDIT_TFIDF_HPP
#define LEAKAUDIT_TFIDF_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "leakaudit/corpus.hpp"

namespace leakaudit {

// Lowercased tokens. Identifier-like runs (emails, phone numbers) survive as
// single tokens: '@' '.' '+' '-' '\'' '_' join a run, and a token is trimmed
// to its outermost alphanumerics.
std::vector<std::string> tokenize(std::string_view text);

struct Vocabulary {
  std::vector<std::string> terms;  // lexicographically ordered, dense ids
  std::vector<std::int64_t> doc_freq;
  std::int64_t doc_count = 0;
  std::unordered_map<std::string, std::int32_t> index;

  std::int32_t size() const { return static_cast<std::int32_t>(terms.size()); }

  // Smoothed inverse document frequency: ln((1+N)/(1+df)) + 1.
  double idf(std::int32_t term_id) const;
};

// Row-sparse matrix of document embeddings; rows are L2-normalized.
struct CsrMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> row_start;  // rows + 1 entries
  std::vector<std::int32_t> col;
  std::vector<double> val;

  std::span<const std::int32_t> row_cols(std::size_t r) const {
    return {col.data() + row_start[r], row_start[r + 1] - row_start[r]};
  }
  std::span<const double> row_vals(std::size_t r) const {
    return {val.data() + row_start[r], row_start[r + 1] - row_start[r]};
  }
};

// Terms with document frequency >= min_df, ordered lexicographically.
// Throws std::invalid_argument on an empty corpus.
Vocabulary fit_vocabulary(const std::vector<Conversation>& corpus,
                          std::int64_t min_df);

// weight(t,d) = tf(t,d) * idf(t), rows L2-normalized; out-of-vocabulary
// tokens are ignored. Must be called with the corpus the vocabulary was
// fit on for the idf statistics to be meaningful.
CsrMatrix tfidf_transform(const std::vector<Conversation>& corpus,
                          const Vocabulary& vocab);

}  // namespace leakaudit

#endif  // LEAKAUDIT_TFIDF_HPP
