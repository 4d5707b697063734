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

#include "leakaudit/tfidf.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

#include "leakaudit/kernels.hpp"

namespace leakaudit {
namespace {

bool is_token_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '@' || c == '.' || c == '+' ||
         c == '-' || c == '\'';
}

bool is_core_char(unsigned char c) { return std::isalnum(c) != 0; }

// Distinct terms of one document with raw counts, ordered by term.
std::map<std::string, std::int64_t> term_counts(std::string_view text) {
  std::map<std::string, std::int64_t> counts;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && !is_token_char(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < n && is_token_char(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      std::size_t lo = i, hi = j;
      while (lo < hi && !is_core_char(static_cast<unsigned char>(text[lo])))
        ++lo;
      while (hi > lo && !is_core_char(static_cast<unsigned char>(text[hi - 1])))
        --hi;
      if (hi > lo) {
        std::string tok(text.substr(lo, hi - lo));
        std::transform(tok.begin(), tok.end(), tok.begin(), [](unsigned char c) {
          return static_cast<char>(std::tolower(c));
        });
        ++counts[tok];
      }
    }
    i = j;
  }
  return counts;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && !is_token_char(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < n && is_token_char(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      std::size_t lo = i, hi = j;
      while (lo < hi && !is_core_char(static_cast<unsigned char>(text[lo])))
        ++lo;
      while (hi > lo && !is_core_char(static_cast<unsigned char>(text[hi - 1])))
        --hi;
      if (hi > lo) {
        std::string tok(text.substr(lo, hi - lo));
        std::transform(tok.begin(), tok.end(), tok.begin(), [](unsigned char c) {
          return static_cast<char>(std::tolower(c));
        });
        out.push_back(std::move(tok));
      }
    }
    i = j;
  }
  return out;
}

double Vocabulary::idf(std::int32_t term_id) const {
  return std::log((1.0 + static_cast<double>(doc_count)) /
                  (1.0 + static_cast<double>(doc_freq[term_id]))) +
         1.0;
}

Vocabulary fit_vocabulary(const std::vector<Conversation>& corpus,
                          std::int64_t min_df) {
  if (corpus.empty()) throw std::invalid_argument("empty corpus");
  std::map<std::string, std::int64_t> df;  // ordered => deterministic ids
  for (const auto& conv : corpus)
    for (const auto& [term, count] : term_counts(conv.text)) {
      (void)count;
      ++df[term];
    }

  Vocabulary vocab;
  vocab.doc_count = static_cast<std::int64_t>(corpus.size());
  for (const auto& [term, freq] : df) {
    if (freq < min_df) continue;
    vocab.index.emplace(term, vocab.size());
    vocab.terms.push_back(term);
    vocab.doc_freq.push_back(freq);
  }
  return vocab;
}

CsrMatrix tfidf_transform(const std::vector<Conversation>& corpus,
                          const Vocabulary& vocab) {
  const auto& ops = kernels::active_ops();
  CsrMatrix m;
  m.rows = corpus.size();
  m.cols = static_cast<std::size_t>(vocab.size());
  m.row_start.reserve(m.rows + 1);
  m.row_start.push_back(0);

  for (const auto& conv : corpus) {
    const std::size_t begin = m.col.size();
    for (const auto& [term, count] : term_counts(conv.text)) {
      auto it = vocab.index.find(term);
      if (it == vocab.index.end()) continue;
      m.col.push_back(it->second);
      m.val.push_back(static_cast<double>(count) * vocab.idf(it->second));
    }
    const std::size_t len = m.col.size() - begin;
    if (len > 0) {
      double* vals = m.val.data() + begin;
      const double norm = std::sqrt(ops.dot(vals, vals, len));
      if (norm > 0.0) ops.scale(vals, 1.0 / norm, len);
    }
    m.row_start.push_back(m.col.size());
  }
  return m;
}

}  // namespace leakaudit
