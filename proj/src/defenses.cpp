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

#include "leakaudit/defenses.hpp"

#include <array>

namespace leakaudit {
namespace {

constexpr const char* kEmailPattern = R"(\b[\w.+'-]+@[\w.-]+\.[A-Za-z]{2,}\b)";
constexpr const char* kPhonePattern =
    R"((\+?\d{1,3}[\s-]?)?(\(?\d{3}\)?[\s-]?)\d{3}[\s-]?\d{4}\b)";
constexpr const char* kZipPattern = R"(\b\d{5}(?:-\d{4})?\b)";
constexpr const char* kCanaryPhrasePattern = R"(\bcanary-phrase-[0-9a-f]{8}\b)";

const std::array<RedactionPattern, 4> kDefaultPatterns{{
    {kEmailPattern, "[REDACTED_EMAIL]"},
    {kPhonePattern, "[REDACTED_PHONE]"},
    {kZipPattern, "[REDACTED_ZIP]"},
    {kCanaryPhrasePattern, "[REDACTED_CANARY]"},
}};

}  // namespace

std::span<const RedactionPattern> default_redaction_patterns() {
  return kDefaultPatterns;
}

const std::regex& email_regex() {
  static const std::regex re(kEmailPattern);
  return re;
}

const std::regex& phone_regex() {
  static const std::regex re(kPhonePattern);
  return re;
}

const std::regex& zip_regex() {
  static const std::regex re(kZipPattern);
  return re;
}

const std::regex& canary_phrase_regex() {
  static const std::regex re(kCanaryPhrasePattern);
  return re;
}

std::string redact_pii(const std::string& text) {
  std::string out = std::regex_replace(text, email_regex(), "[REDACTED_EMAIL]");
  out = std::regex_replace(out, phone_regex(), "[REDACTED_PHONE]");
  out = std::regex_replace(out, zip_regex(), "[REDACTED_ZIP]");
  out = std::regex_replace(out, canary_phrase_regex(), "[REDACTED_CANARY]");
  return out;
}

std::string redact_with(const std::string& text,
                        std::span<const RedactionPattern> patterns) {
  std::string out = text;
  for (const auto& p : patterns)
    out = std::regex_replace(out, std::regex(p.pattern), p.replacement);
  return out;
}

std::vector<ClusterSummary> apply_kmin(std::vector<ClusterSummary> summaries,
                                       std::int64_t k_min) {
  for (auto& s : summaries) s.published = s.size >= k_min;
  return summaries;
}

std::vector<ClusterSummary> apply_defenses(std::vector<ClusterSummary> summaries,
                                           const DefenseConfig& cfg) {
  summaries = apply_kmin(std::move(summaries), cfg.k_min);
  if (cfg.redact)
    for (auto& s : summaries)
      if (s.published) s.text = redact_pii(s.text);
  return summaries;
}

}  // namespace leakaudit
