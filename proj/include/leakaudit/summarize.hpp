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

#ifndef LEAKAUDIT_SUMMARIZE_HPP
#define LEAKAUDIT_SUMMARIZE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "leakaudit/corpus.hpp"
#include "leakaudit/kmeans.hpp"
#include "leakaudit/tfidf.hpp"

namespace leakaudit {

enum class Strategy { keyword, example };

const char* to_string(Strategy s);
Strategy strategy_from_string(const std::string& name);

struct ClusterSummary {
  std::int32_t cluster_id = 0;
  std::int64_t size = 0;
  Strategy strategy = Strategy::keyword;
  std::string text;
  bool published = true;
};

// "Topics: t1, t2, ..." with the top_t terms by summed TF-IDF weight over
// the member rows, ties broken lexicographically. Never quotes member text.
// Throws std::invalid_argument on an empty member list.
ClusterSummary summarize_keyword(std::int32_t cluster_id,
                                 std::span<const std::int64_t> members,
                                 const CsrMatrix& X, const Vocabulary& vocab,
                                 int top_t);

// "Representative examples: (1) ..., (2) ..." quoting the m members nearest
// the centroid (ties by conversation id). Excerpts are verbatim member text
// truncated at a whitespace boundary within excerpt_len characters.
// Throws std::invalid_argument on an empty member list.
ClusterSummary summarize_extractive(std::int32_t cluster_id,
                                    std::span<const std::int64_t> members,
                                    const CsrMatrix& X,
                                    std::span<const double> centroid,
                                    const std::vector<Conversation>& corpus,
                                    int m, int excerpt_len);

}  // namespace leakaudit

#endif  // LEAKAUDIT_SUMMARIZE_HPP
