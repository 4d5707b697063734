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

#include "leakaudit/corpus.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace leakaudit {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Topic template bank.
//
// 24 built-in prompt families. Popularity is tiered (head/mid/tail) so the
// fitted clustering produces a realistic mix of large publishable clusters
// and small suppressible ones; head families use three prompt variants,
// the others two.
// ---------------------------------------------------------------------------

struct TopicFamily {
  const char* variants[3];
};

constexpr int kFamilyCount = 24;

constexpr std::array<TopicFamily, kFamilyCount> kFamilies{{
    {{"Help me debug this Python traceback from my data pipeline.",
      "Why does my Python unit test fail with an import error?",
      "Refactor this Python function so the nested loop runs faster."}},
    {{"Rewrite my resume summary for a senior marketing role.",
      "Draft a short cover letter for an internship application.",
      "Polish the wording of my annual review highlights."}},
    {{"Plan a weekend travel itinerary for two days in Lisbon.",
      "Which trains connect the airport with downtown Prague?",
      "Suggest budget hotels near the old town in Kyoto."}},
    {{"Build a beginner workout plan with three gym sessions weekly.",
      "How much protein should I eat after strength training?",
      "Suggest stretching routines for lower back stiffness."}},
    {{"Explain how index funds differ from actively managed funds.",
      "Help me budget a monthly paycheck with the 50/30/20 rule.",
      "What does a higher interest rate mean for my savings?"}},
    {{"Share a quick pasta recipe using pantry staples only.",
      "How do I keep roasted vegetables from turning soggy?",
      "Convert this cookie recipe from cups to grams."}},
    {{"Optimize this slow SQL join across two large tables.",
      "Explain when the query planner prefers a sequential scan.",
      "Write a SQL query that deduplicates customer rows."}},
    {{"Draft a polite reply declining the extra project work.",
      "Summarize these meeting notes into three action items.",
      "Write an agenda for our quarterly planning session."}},
    {{"Why is my JavaScript fetch call returning a stale response?",
      "Center a div with CSS grid without fixed heights.",
      "Explain event delegation for dynamically added buttons."}},
    {{"Which vegetables grow well in partial shade beds?",
      "My tomato leaves are curling, what causes that?",
      "When should I start seedlings indoors this spring?"}},
    {{"Teach me five useful Spanish phrases for ordering food.",
      "How long does it take to reach conversational French?",
      "Explain gendered nouns to a confused beginner."}},
    {{"Explain p-values to someone without a math background.",
      "When should I report a median instead of a mean?",
      "What sample size do I need for this survey?"}},
    {{"My car makes a clicking noise when turning left.",
      "How often should brake fluid actually be replaced?",
      "Is it safe to drive with a slow tire leak?"}},
    {{"My cat refuses the new litter box, any ideas?",
      "What vaccines does an indoor puppy really need?",
      "How do I introduce a kitten to an older dog?"}},
    {{"Suggest practice drills for barre chords on guitar.",
      "How do I read bass clef notes faster?",
      "What tempo should a beginner practice scales at?"}},
    {{"Which aperture works best for evening street photography?",
      "Why are my indoor photos always grainy?",
      "Explain back button focus for moving subjects."}},
    {{"Explain the main ideas behind the Sicilian defense.",
      "How do I stop blundering pieces in the middlegame?",
      "Which endgames should a club player learn first?"}},
    {{"How should I negotiate salary for my first offer?",
      "Is switching teams internally bad for promotion chances?",
      "What questions impress interviewers at the end?"}},
    {{"How do I patch a small hole in drywall?",
      "The bathroom faucet drips at night, easy fix?",
      "Which caulk works for a drafty window frame?"}},
    {{"When is the next visible meteor shower this autumn?",
      "Recommend a starter telescope for planet viewing.",
      "Why does the moon look bigger near the horizon?"}},
    {{"Teach me the basic strategy for backgammon openings.",
      "Which cooperative board games suit four players?",
      "Explain worker placement mechanics to new players."}},
    {{"How do I hem jeans without a sewing machine?",
      "My thread keeps bunching under the fabric, why?",
      "Which stitch length suits stretchy knit material?"}},
    {{"What grind size suits a pour over brewer?",
      "Why does my espresso taste sour in the morning?",
      "How should I store beans for maximum freshness?"}},
    {{"Build a couch to 5k schedule over eight weeks.",
      "How do I avoid shin splints on pavement runs?",
      "What pace should easy runs actually feel like?"}},
}};

// Trailing style request appended to every prompt. Two draws from a shared
// pool give each conversation light per-document texture in the embedding
// without disturbing the family structure.
constexpr std::array<const char*, 32> kStyleWords{
    "actionable", "balanced", "brief",    "careful",   "casual",
    "clean",      "clear",    "compact",  "complete",  "concise",
    "concrete",   "detailed", "direct",   "easy",      "efficient",
    "flexible",   "focused",  "formal",   "friendly",  "honest",
    "minimal",    "modern",   "neat",     "organized", "practical",
    "precise",    "quick",    "readable", "realistic", "reliable",
    "simple",     "thorough"};

constexpr std::array<const char*, 24> kStreetNames{
    "Evergreen", "Maple",    "Cedar",    "Willow",   "Juniper",  "Alder",
    "Birch",     "Laurel",   "Magnolia", "Sycamore", "Hawthorn", "Chestnut",
    "Poplar",    "Aspen",    "Linden",   "Mulberry", "Rosewood", "Bayberry",
    "Dogwood",   "Elmwood",  "Fernhill", "Oakridge", "Pinecrest", "Summit"};

constexpr std::array<const char*, 8> kStreetTypes{
    "Street", "Avenue", "Terrace", "Lane", "Road", "Court", "Drive", "Way"};

constexpr std::array<const char*, 24> kCities{
    "Springfield", "Riverton",    "Lakewood",   "Fairview",  "Brookside",
    "Hillcrest",   "Greenfield",  "Ashford",    "Clearwater", "Stonebridge",
    "Westhaven",   "Northgate",   "Eastvale",   "Southport", "Millbrook",
    "Oakdale",     "Cedarville",  "Maplewood",  "Pinehurst", "Elmhurst",
    "Birchwood",   "Willowbrook", "Silverlake", "Redmondale"};

constexpr std::array<const char*, 8> kPiiFirstNames{
    "jordan", "taylor", "casey", "riley", "morgan", "avery", "quinn", "rowan"};
constexpr std::array<const char*, 8> kPiiLastNames{
    "lee", "kim", "cruz", "park", "diaz", "reyes", "shah", "cole"};

struct TopicTiers {
  int head;
  int mid;
  int tail;
};

TopicTiers tiers_for(int topics) {
  TopicTiers t{};
  t.head = (topics + 2) / 3;
  t.mid = topics >= 6 ? (topics + 5) / 6 : 0;
  if (t.head + t.mid > topics) t.mid = topics - t.head;
  t.tail = topics - t.head - t.mid;
  return t;
}

double tier_weight(const TopicTiers& t, int topic) {
  if (topic < t.head) return 8.0;
  if (topic < t.head + t.mid) return 3.5;
  return 0.55;
}

int tier_variants(const TopicTiers& t, int topic) {
  return topic < t.head ? 3 : 2;
}

std::string format_digits(std::uint64_t value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*llu", width,
                static_cast<unsigned long long>(value));
  return buf;
}

std::string pii_string(Rng& rng) {
  switch (rng.below(3)) {
    case 0:
      return std::string(rng.pick(kPiiFirstNames)) + "." +
             rng.pick(kPiiLastNames) + "." + format_digits(rng.below(10000), 4) +
             "@example.com";
    case 1:
      return "+1-206-555-" + format_digits(rng.below(10000), 4);
    default:
      return "9" + format_digits(rng.below(10000), 4);
  }
}

std::string join_segments(const std::vector<std::string>& segments) {
  std::string out;
  for (const auto& s : segments) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

json conversation_to_json(const Conversation& c) {
  json rec;
  rec["id"] = c.id;
  rec["topic"] = c.topic_id;
  rec["text"] = c.text;
  json cans = json::array();
  for (const auto& cr : c.planted_canaries)
    cans.push_back({{"kind", to_string(cr.kind)}, {"value", cr.value}});
  rec["canaries"] = std::move(cans);
  rec["pii"] = c.planted_pii;
  return rec;
}

Conversation conversation_from_json(const json& rec) {
  Conversation c;
  c.id = rec.at("id").get<std::int64_t>();
  c.topic_id = rec.at("topic").get<std::int32_t>();
  c.text = rec.at("text").get<std::string>();
  for (const auto& cr : rec.at("canaries")) {
    CanaryRecord r;
    r.kind = canary_kind_from_string(cr.at("kind").get<std::string>());
    r.value = cr.at("value").get<std::string>();
    if (r.value.empty()) throw std::runtime_error("empty canary value");
    if (c.text.find(r.value) == std::string::npos)
      throw std::runtime_error("canary value not present in text");
    c.planted_canaries.push_back(std::move(r));
  }
  for (const auto& p : rec.at("pii")) {
    std::string v = p.get<std::string>();
    if (c.text.find(v) == std::string::npos)
      throw std::runtime_error("pii string not present in text");
    c.planted_pii.push_back(std::move(v));
  }
  return c;
}

}  // namespace

const char* to_string(CanaryKind kind) {
  switch (kind) {
    case CanaryKind::email: return "email";
    case CanaryKind::phone: return "phone";
    case CanaryKind::address: return "address";
    case CanaryKind::phrase: return "phrase";
  }
  return "unknown";
}

CanaryKind canary_kind_from_string(const std::string& name) {
  if (name == "email") return CanaryKind::email;
  if (name == "phone") return CanaryKind::phone;
  if (name == "address") return CanaryKind::address;
  if (name == "phrase") return CanaryKind::phrase;
  throw std::runtime_error("unknown canary kind: " + name);
}

CanaryRecord render_canary(CanaryKind kind, Rng& rng) {
  CanaryRecord rec;
  rec.kind = kind;
  switch (kind) {
    case CanaryKind::email:
      rec.value =
          "alex.patel." + format_digits(rng.below(100000), 5) + "@example.com";
      break;
    case CanaryKind::phone:
      rec.value = "+1-415-555-" + format_digits(rng.below(10000), 4);
      break;
    case CanaryKind::address: {
      std::uint64_t num = 100 + rng.below(9900);
      rec.value = std::to_string(num) + " " + rng.pick(kStreetNames) + " " +
                  rng.pick(kStreetTypes) + ", " + rng.pick(kCities) + ", CA " +
                  format_digits(rng.below(100000), 5);
      break;
    }
    case CanaryKind::phrase: {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "%08x",
                    static_cast<unsigned>(rng.below(0x100000000ULL)));
      rec.value = std::string("canary-phrase-") + buf;
      break;
    }
  }
  return rec;
}

std::vector<Conversation> generate_corpus(const GenConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("n must be >= 1");
  if (cfg.topics < 1) throw std::invalid_argument("topics must be >= 1");
  if (cfg.canary_rate < 0.0 || cfg.canary_rate > 1.0)
    throw std::invalid_argument("canary_rate must be in [0,1]");
  if (cfg.pii_rate < 0.0 || cfg.pii_rate > 1.0)
    throw std::invalid_argument("pii_rate must be in [0,1]");

  Rng rng(cfg.seed);
  const TopicTiers tiers = tiers_for(cfg.topics);

  std::vector<double> cumulative(cfg.topics);
  double total = 0.0;
  for (int t = 0; t < cfg.topics; ++t) {
    total += tier_weight(tiers, t);
    cumulative[t] = total;
  }

  std::unordered_set<std::string> used_canaries;
  std::vector<Conversation> corpus;
  corpus.reserve(static_cast<std::size_t>(cfg.n));

  for (std::int64_t i = 0; i < cfg.n; ++i) {
    Conversation conv;
    conv.id = i;

    const double r = rng.real01() * total;
    int topic = 0;
    while (topic + 1 < cfg.topics && r >= cumulative[topic]) ++topic;
    conv.topic_id = topic;

    const TopicFamily& family = kFamilies[topic % kFamilyCount];
    const int variant =
        static_cast<int>(rng.below(tier_variants(tiers, topic)));
    std::string core = family.variants[variant];
    if (topic >= kFamilyCount)
      core += " (thread t" + std::to_string(topic) + ")";

    const bool plant_canary = rng.bernoulli(cfg.canary_rate);

    // Style sentence: canary-bearing prompts spend part of their length on
    // the contact clause, so they tend to draw fewer style words.
    const std::size_t style_count =
        plant_canary ? (rng.below(4) == 0 ? 1 : 2) : 2 + rng.below(2);
    std::string style = "Keep it ";
    for (std::size_t w = 0; w < style_count; ++w) {
      if (w > 0) style += (w + 1 == style_count) ? " and " : ", ";
      style += rng.pick(kStyleWords);
    }
    style += '.';

    std::vector<std::string> segments;
    segments.push_back(std::move(core));
    segments.push_back(std::move(style));

    if (plant_canary) {
      const CanaryKind kind = static_cast<CanaryKind>(rng.below(4));
      CanaryRecord canary;
      for (int attempt = 0; attempt < 1000; ++attempt) {
        canary = render_canary(kind, rng);
        if (used_canaries.insert(canary.value).second) break;
        if (attempt == 999)
          throw std::runtime_error("canary value space exhausted");
      }
      const std::size_t pos = rng.below(segments.size() + 1);
      segments.insert(segments.begin() + static_cast<std::ptrdiff_t>(pos),
                      "Contact: " + canary.value);
      conv.planted_canaries.push_back(std::move(canary));
    }

    if (rng.bernoulli(cfg.pii_rate)) {
      std::string pii = pii_string(rng);
      segments.push_back("Reach me at " + pii + ".");
      conv.planted_pii.push_back(std::move(pii));
    }

    conv.text = join_segments(segments);
    corpus.push_back(std::move(conv));
  }
  return corpus;
}

void write_corpus(const std::vector<Conversation>& convos,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (const auto& c : convos) {
    out << conversation_to_json(c).dump() << '\n';
    if (!out) throw std::runtime_error("write failure: " + path);
  }
}

std::vector<Conversation> read_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::vector<Conversation> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      corpus.push_back(conversation_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error("malformed corpus record at line " +
                               std::to_string(line_no) + ": " + e.what());
    }
  }
  return corpus;
}

}  // namespace leakaudit
