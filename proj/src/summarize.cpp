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

#include "leakaudit/summarize.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "leakaudit/kernels.hpp"

namespace leakaudit {
namespace {

std::string excerpt_of(const std::string& text, int excerpt_len) {
  const std::size_t limit = static_cast<std::size_t>(excerpt_len);
  if (text.size() <= limit) return text;
  std::size_t cut = 0;
  for (std::size_t i = 0; i <= limit && i < text.size(); ++i)
    if (std::isspace(static_cast<unsigned char>(text[i]))) cut = i;
  if (cut == 0) cut = limit;  // no whitespace to break at
  std::string out = text.substr(0, cut);
  while (!out.empty() &&
         std::isspace(static_cast<unsigned char>(out.back())))
    out.pop_back();
  return out;
}

}  // namespace

const char* to_string(Strategy s) {
  return s == Strategy::keyword ? "keyword" : "example";
}

Strategy strategy_from_string(const std::string& name) {
  if (name == "keyword") return Strategy::keyword;
  if (name == "example") return Strategy::example;
  throw std::runtime_error("unknown summarizer: " + name);
}

ClusterSummary summarize_keyword(std::int32_t cluster_id,
                                 std::span<const std::int64_t> members,
                                 const CsrMatrix& X, const Vocabulary& vocab,
                                 int top_t) {
  if (members.empty()) throw std::invalid_argument("empty cluster");

  std::vector<double> weight(static_cast<std::size_t>(vocab.size()), 0.0);
  for (const std::int64_t m : members) {
    const auto cols = X.row_cols(static_cast<std::size_t>(m));
    const auto vals = X.row_vals(static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < cols.size(); ++j)
      weight[static_cast<std::size_t>(cols[j])] += vals[j];
  }

  std::vector<std::int32_t> terms;
  for (std::int32_t t = 0; t < vocab.size(); ++t)
    if (weight[static_cast<std::size_t>(t)] > 0.0) terms.push_back(t);
  std::sort(terms.begin(), terms.end(), [&](std::int32_t a, std::int32_t b) {
    const double wa = weight[static_cast<std::size_t>(a)];
    const double wb = weight[static_cast<std::size_t>(b)];
    if (wa != wb) return wa > wb;
    return vocab.terms[static_cast<std::size_t>(a)] <
           vocab.terms[static_cast<std::size_t>(b)];
  });
  if (terms.size() > static_cast<std::size_t>(top_t))
    terms.resize(static_cast<std::size_t>(top_t));

  ClusterSummary s;
  s.cluster_id = cluster_id;
  s.size = static_cast<std::int64_t>(members.size());
  s.strategy = Strategy::keyword;
  s.text = "Topics:";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    s.text += i == 0 ? " " : ", ";
    s.text += vocab.terms[static_cast<std::size_t>(terms[i])];
  }
  return s;
}

ClusterSummary summarize_extractive(std::int32_t cluster_id,
                                    std::span<const std::int64_t> members,
                                    const CsrMatrix& X,
                                    std::span<const double> centroid,
                                    const std::vector<Conversation>& corpus,
                                    int m, int excerpt_len) {
  if (members.empty()) throw std::invalid_argument("empty cluster");
  const auto& ops = kernels::active_ops();
  const double csq = ops.dot(centroid.data(), centroid.data(), centroid.size());

  struct Ranked {
    double dist;
    std::int64_t conv_id;
    std::int64_t row;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(members.size());
  for (const std::int64_t row : members) {
    const auto cols = X.row_cols(static_cast<std::size_t>(row));
    const auto vals = X.row_vals(static_cast<std::size_t>(row));
    const double xsq = ops.dot(vals.data(), vals.data(), vals.size());
    const double dot = ops.sparse_dot(cols.data(), vals.data(), cols.size(),
                                      centroid.data());
    ranked.push_back(
        {xsq - 2.0 * dot + csq, corpus[static_cast<std::size_t>(row)].id, row});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    return a.conv_id < b.conv_id;
  });
  const std::size_t take =
      std::min(ranked.size(), static_cast<std::size_t>(m));

  ClusterSummary s;
  s.cluster_id = cluster_id;
  s.size = static_cast<std::int64_t>(members.size());
  s.strategy = Strategy::example;
  s.text = "Representative examples:";
  for (std::size_t i = 0; i < take; ++i) {
    s.text += i == 0 ? " " : ", ";
    s.text += "(" + std::to_string(i + 1) + ") ";
    s.text +=
        excerpt_of(corpus[static_cast<std::size_t>(ranked[i].row)].text,
                   excerpt_len);
  }
  return s;
}

}  // namespace leakaudit
