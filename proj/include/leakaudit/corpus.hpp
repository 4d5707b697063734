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

#ifndef LEAKAUDIT_CORPUS_HPP
#define LEAKAUDIT_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "leakaudit/rng.hpp"

namespace leakaudit {

enum class CanaryKind { email, phone, address, phrase };

const char* to_string(CanaryKind kind);
CanaryKind canary_kind_from_string(const std::string& name);

// A planted secret. Its verbatim reappearance in published output is the
// ground truth for leakage measurement.
struct CanaryRecord {
  CanaryKind kind;
  std::string value;
  friend bool operator==(const CanaryRecord&, const CanaryRecord&) = default;
};

// One synthetic single-turn conversation. Every planted canary value and
// every planted PII string appears verbatim in `text`.
struct Conversation {
  std::int64_t id = 0;
  std::int32_t topic_id = 0;
  std::string text;
  std::vector<CanaryRecord> planted_canaries;
  std::vector<std::string> planted_pii;
  friend bool operator==(const Conversation&, const Conversation&) = default;
};

struct GenConfig {
  std::int64_t n = 3000;
  std::int32_t topics = 24;
  double canary_rate = 0.60;
  double pii_rate = 0.20;
  std::uint64_t seed = 0;
};

// Renders one canary value from its kind template:
//   email    alex.patel.DDDDD@example.com
//   phone    +1-415-555-DDDD
//   address  <num> <street>, <city>, CA <zip5>
//   phrase   canary-phrase-XXXXXXXX (8 lowercase hex)
CanaryRecord render_canary(CanaryKind kind, Rng& rng);

// Deterministic synthetic corpus. Each conversation draws a topic, a core
// prompt, and independently (per Bernoulli rate) at most one canary and one
// PII string; canary values are globally unique within the corpus.
// Throws std::invalid_argument on n < 1, topics < 1 or rates outside [0,1].
std::vector<Conversation> generate_corpus(const GenConfig& cfg);

// Line-delimited record file, one JSON object per line with fields exactly
// {id, topic, text, canaries:[{kind,value}], pii:[string]}.
void write_corpus(const std::vector<Conversation>& convos,
                  const std::string& path);

// Throws std::runtime_error naming the offending line on malformed input.
std::vector<Conversation> read_corpus(const std::string& path);

}  // namespace leakaudit

#endif  // LEAKAUDIT_CORPUS_HPP
