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

#ifndef LEAKAUDIT_DEFENSES_HPP
#define LEAKAUDIT_DEFENSES_HPP

#include <cstdint>
#include <regex>
#include <span>
#include <string>
#include <vector>

#include "leakaudit/summarize.hpp"

namespace leakaudit {

struct RedactionPattern {
  std::string pattern;      // ECMAScript regex source
  std::string replacement;  // placeholder token, no digits or '@'
};

// Email, phone, ZIP, canary-phrase, in that application order. Email must
// run before the digit-based patterns: the digits inside an address-style
// email would otherwise ZIP-match first and break the email replacement.
std::span<const RedactionPattern> default_redaction_patterns();

// Compiled pattern singletons shared with the evaluation counters.
const std::regex& email_regex();
const std::regex& phone_regex();
const std::regex& zip_regex();
const std::regex& canary_phrase_regex();

// Replaces every match of the default patterns, in order, with its
// placeholder token. Idempotent: placeholders contain nothing re-matchable.
std::string redact_pii(const std::string& text);

// Same, with an explicit pattern list (compiled per call).
std::string redact_with(const std::string& text,
                        std::span<const RedactionPattern> patterns);

// Sets published = (size >= k_min) on every summary. Suppressed summaries
// are retained for audit, never deleted.
std::vector<ClusterSummary> apply_kmin(std::vector<ClusterSummary> summaries,
                                       std::int64_t k_min);

struct DefenseConfig {
  std::int64_t k_min = 0;  // 0 disables the threshold
  bool redact = false;
};

// k-min first, then redaction of the summaries that remain published.
std::vector<ClusterSummary> apply_defenses(std::vector<ClusterSummary> summaries,
                                           const DefenseConfig& cfg);

}  // namespace leakaudit

#endif  // LEAKAUDIT_DEFENSES_HPP
