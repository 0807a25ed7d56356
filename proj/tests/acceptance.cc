// Copyright 2026 The Tombrain Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "support/oracle.h"
#include "support/random_brain.h"
#include "tom/error.h"
#include "tom/session.h"

namespace tom {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string read_scenario(const std::string& name) {
  std::ifstream in(std::string(TOM_SCENARIO_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> robot_lines(const ScriptResult& r) {
  std::vector<std::string> out;
  for (const auto& e : r.transcript) {
    if (e.role == TranscriptEntry::Role::kRobot) out.push_back(e.text);
  }
  return out;
}

// Lines of the dialogue proper: everything after the prelude's last line.
std::vector<std::string> tail(const std::vector<std::string>& lines, std::size_t n) {
  return {lines.end() - static_cast<std::ptrdiff_t>(std::min(n, lines.size())), lines.end()};
}

ScriptResult replay(const std::string& name, Service& svc, Outcome& out) {
  ScriptResult r = run_script(parse_script(read_scenario(name)), svc);
  if (!r.passed()) out.check(false, r.mismatches.front().describe());
  return r;
}

Outcome dialogue_one() {
  Outcome out;
  Service svc;
  auto start = Clock::now();
  ScriptResult r = run_script(parse_script(read_scenario("d1.scn")), svc);
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  out.check(r.passed(), r.passed() ? "" : r.mismatches.front().describe());
  const std::vector<std::string> want = {
      "Hi there, I would like to know you.",
      "My name is Leolani, what is your name?",
      "I hope I am correct and your name is: Selene.",
      "Nice to meet you Selene. Now I have a new friend.",
      "Where are you from?",
      "Now I know 1 person from Mexico."};
  out.check(robot_lines(r) == want, "robot lines differ");
  out.check(secs < 1.0, "took " + std::to_string(secs) + " s");
  if (out.ok) out.detail = "6 spoken lines exact";
  return out;
}

Outcome dialogue_two() {
  Outcome out;
  Service svc;
  ScriptResult r = replay("d2.scn", svc, out);
  const std::vector<std::string> want = {
      "Hi Lenka, nice to see you.",
      "Lenka, where are you from?",
      "Nice, I did not know anybody from Serbia yet.",
      "Bram is from the Netherlands.",
      "You told me that Bram likes romantic movies.",
      "Hi Bram.",
      "I am surprised.",
      "Bram likes romantic movies, says Lenka.",
      "Bram likes science fiction movies, says Bram."};
  out.check(tail(robot_lines(r), want.size()) == want, "dialogue lines differ");
  out.check(svc.view("conflicts").size() == 1, "expected one open conflict");
  return out;
}

Outcome dialogue_three() {
  Outcome out;
  Service svc;
  ScriptResult r = replay("d3.scn", svc, out);
  const std::vector<std::string> want = {
      "Greetings Bram. Nice to see you again.",
      "You are from the Netherlands, you said.",
      "Yes I know her, she is a very good friend of mine.",
      "Lenka is from Serbia, Lenka said",
      "I believe her."};
  out.check(tail(robot_lines(r), want.size()) == want, "dialogue lines differ");
  bool believes = svc.with_brain([](const Brain& b) {
    auto lenka = b.find_person_by_name("Lenka");
    const Claim* c = b.claims().find(Triple{*lenka, n2mu("isFrom"), world("Serbia")});
    return c != nullptr && b.believes(*lenka, c->id);
  });
  out.check(believes, "believes(Lenka, Lenka isFrom Serbia) is false");
  return out;
}

Outcome dialogue_four() {
  Outcome out;
  Service svc;
  ScriptResult r = replay("d4.scn", svc, out);
  const std::vector<std::string> want = {
      "Greetings Bram. Nice to see you again.",
      "Guess what? I just saw a cat!",
      "Hi Selene. Greetings.",
      "Guess what, I just met a rabbit.",
      "No I have never seen a cat.",
      "I saw a rabbit and a panda.",
      "Rabbits bite, Selene said.",
      "Rabbits cuddle, Bram said.",
      "Bram likes rabbits, Bram said."};
  out.check(tail(robot_lines(r), want.size()) == want, "dialogue lines differ");
  const ObjectTrack& t1 = svc.controller().gateway().track("t1");
  double best_cat = 0;
  for (const auto& h : t1.hypotheses) {
    if (h.label == "cat") best_cat = std::max(best_cat, h.confidence);
  }
  out.check(t1.effective_label() == "rabbit" && best_cat >= 0.9,
            "track t1 is not a rabbit over a 0.9 cat hypothesis");
  return out;
}

// Lenka and Selene on "Bram is laughing", then the robot sees Bram.
Outcome laugh_graph() {
  Outcome out;
  Brain brain;
  Iri lenka = brain.register_person("Lenka");
  Iri selene = brain.register_person("Selene");
  Iri bram = brain.register_person("Bram");
  Parser parser(Lexicon::defaults());
  Date day;

  auto statement = [&](const Iri& who, const std::string& text) {
    ParseContext ctx;
    ctx.speaker = who;
    ctx.robot = brain.robot();
    ctx.brain = &brain;
    auto toks = tokenize(text);
    auto parsed = parser.parse_statement(toks, char_length(text), ctx);
    return std::get<StatementParse>(parsed);
  };
  ChatRecord chat1 = brain.open_chat(lenka, day);
  StatementParse first = statement(lenka, "Bram is laughing");
  for (const auto& h : first.hints) brain.ensure_instance(h.iri, h.label, h.type);
  brain.assert_statement(lenka, chat1, "Bram is laughing", first.span, first.subject,
                         first.predicate, first.object,
                         Perspective::parse("CONFIRM,UNCERTAIN,SURPRISE"), day);
  ChatRecord chat2 = brain.open_chat(selene, day);
  StatementParse denial = statement(selene, "No, Bram is not laughing");
  out.check(denial.perspective.render() == "DENY,CERTAIN", "denial cues not detected");
  out.check(denial.subject == first.subject && denial.object == first.object,
            "denial parsed to another triple");
  brain.assert_statement(selene, chat2, "No, Bram is not laughing", denial.span,
                         denial.subject, denial.predicate, denial.object,
                         denial.perspective, day);
  // "Yes, you are right": Lenka takes over Selene's latest perspective.
  auto agree = parser.parse_social(tokenize("Yes, you are right"), 0.9);
  out.check(agree && agree->kind == SocialKind::kAffirm, "agreement not an affirmation");
  const Claim* claim = brain.claims().find(Triple{first.subject, first.predicate, first.object});
  auto selene_view = brain.latest_from(selene, claim->id);
  brain.assert_statement(lenka, chat1, "Yes, you are right", {0, 18}, first.subject,
                         first.predicate, first.object,
                         selene_view->attribution.perspective, day);
  brain.record_percept(PerceptKind::kFace, bram, 0.95, bram, {bram}, std::nullopt, day);

  Brain back = Brain::deserialize(brain.serialize());
  const TripleStore& s = back.store();
  Iri laugh = world("laugh");
  Iri c1 = world("claim1");
  Iri m1 = talk("chat1_turn1_char0-16"), m2 = talk("chat2_turn1_char0-24"),
      m3 = talk("chat1_turn2_char0-18");
  Term t20180512 = time_iri("20180512");
  std::vector<Triple> want = {
      {lenka, rdfs("label"), Term::literal("Lenka")},
      {bram, rdfs("label"), Term::literal("Bram")},
      {laugh, rdf("type"), sem("Event")},
      {laugh, rdfs("label"), Term::literal("laugh")},
      {laugh, grasp("denotedIn"), m1},
      {c1, rdf("type"), grasp("Statement")},
      {c1, grasp("subject"), laugh},
      {c1, grasp("predicate"), sem("hasActor")},
      {c1, grasp("object"), bram},
      {bram, grasp("denotedBy"), sensor("FaceRecognition1")},
  };
  struct TurnRow {
    Iri turn, mention, attr, who;
    const char* values;
  };
  const TurnRow rows[] = {
      {talk("chat1_turn1"), m1, talk("chat1_turn1_char0-16_ATTR1"), lenka,
       "CONFIRM,UNCERTAIN,SURPRISE"},
      {talk("chat2_turn1"), m2, talk("chat2_turn1_char0-24_ATTR1"), selene, "DENY,CERTAIN"},
      {talk("chat1_turn2"), m3, talk("chat1_turn2_char0-18_ATTR2"), lenka, "DENY,CERTAIN"}};
  for (const auto& r : rows) {
    want.push_back({r.turn, rdf("type"), grasp("Turn")});
    want.push_back({r.turn, sem("hasActor"), r.who});
    want.push_back({r.turn, sem("hasTime"), t20180512});
    want.push_back({r.mention, rdf("type"), grasp("Mention")});
    want.push_back({r.mention, grasp("denotes"), c1});
    want.push_back({r.mention, prov("wasDerivedFrom"), r.turn});
    want.push_back({r.mention, prov("wasAttributedTo"), r.who});
    want.push_back({r.attr, rdf("type"), grasp("Attribution")});
    want.push_back({r.attr, grasp("isAttributionFor"), r.mention});
    for (const auto& v : Perspective::parse(r.values).values()) {
      want.push_back({r.attr, rdf("value"), v});
    }
    want.push_back({bram, grasp("denotedIn"), r.mention});
  }
  for (const auto& t : want) {
    out.check(s.contains(t), "missing " + render_triple(t));
  }
  auto count = [&](std::vector<TriplePattern> q) { return s.count(q); };
  out.check(count({{var("c"), Term(rdf("type")), Term(grasp("Statement")), false, {}}}) == 1,
            "claim node count");
  out.check(count({{var("m"), Term(grasp("denotes")), Term(c1), false, {}}}) == 3,
            "mentions of claim1");
  out.check(count({{var("a"), Term(rdf("type")), Term(grasp("Attribution")), false, {}}}) == 3,
            "attribution count");
  out.check(count({{Term(bram), Term(grasp("denotedIn")), var("m"), false, {}}}) == 3,
            "Bram denotedIn links");
  out.check(count({{Term(bram), Term(grasp("denotedBy")), var("m"), false, {}}}) == 1,
            "Bram denotedBy links");
  if (out.ok) out.detail = std::to_string(want.size()) + " triples present";
  return out;
}

Outcome query_oracle() {
  Outcome out;
  std::mt19937 rng(20180512);
  auto start = Clock::now();
  int queries = 0, answered = 0;
  std::size_t biggest = 0;
  for (int b = 0; b < 100 && out.ok; ++b) {
    Brain brain = testing::random_brain(rng, 500);
    biggest = std::max(biggest, brain.store().size());
    testing::Oracle oracle(brain.store());
    for (int q = 0; q < 10; ++q, ++queries) {
      auto query = testing::random_query(rng, brain.store());
      auto got = brain.store().select(query, std::numeric_limits<std::size_t>::max());
      auto want = oracle.select(query);
      std::vector<std::string> a, w;
      for (const auto& r : got) a.push_back(testing::Oracle::render(r));
      for (const auto& r : want) w.push_back(testing::Oracle::render(r));
      std::sort(a.begin(), a.end());
      answered += !a.empty();
      std::string text;
      for (const auto& tp : query) text += tp.render() + " . ";
      out.check(a == w, "disagrees on " + text);
      out.check(brain.store().ask(query) == !w.empty(), "ask disagrees on " + text);
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  out.check(biggest <= 500, "brain over 500 triples");
  out.check(secs < 60, "took " + std::to_string(secs) + " s");
  if (out.ok) {
    out.detail = std::to_string(queries) + " queries, " + std::to_string(answered) +
                 " non-empty, " + std::to_string(secs).substr(0, 5) + " s";
  }
  return out;
}

Outcome round_trip() {
  Outcome out;
  std::mt19937 rng(512);
  for (int i = 0; i < 100 && out.ok; ++i) {
    Brain b = testing::random_brain(rng, 500);
    std::string once = b.serialize();
    out.check(Brain::deserialize(once).serialize() == once,
              "dump round trip differs for brain " + std::to_string(i));
  }
  // Generation then parsing, every predicate by every ordered person pair.
  Generator gen(TemplateTable::defaults(), Lexicon::defaults());
  Parser parser(Lexicon::defaults());
  Brain brain;
  std::vector<Iri> people = {brain.register_person("Lenka"), brain.register_person("Selene"),
                             brain.register_person("Bram")};
  brain.ensure_instance(world("Amsterdam"), "Amsterdam", n2mu("Location"));
  brain.ensure_instance(world("Netherlands"), "the Netherlands", n2mu("Location"));
  ResponseContext rctx{brain.robot(), brain.robot(), SourcePolicy::kBare};
  ParseContext pctx;
  pctx.robot = brain.robot();
  pctx.brain = &brain;
  int combos = 0;
  for (const auto& [p, info] : brain.ontology().predicates()) {
    for (const auto& a : people) {
      for (const auto& b : people) {
        for (Polarity pol : {Polarity::kConfirm, Polarity::kDeny}) {
          Iri s = a;
          Term o = b;
          if (p == n2mu("hasName")) {
            o = Term::literal(*brain.label_of(a));
          } else if (p == sem("hasActor")) {
            s = world("laugh");
          } else if (p == n2mu("isLocatedIn")) {
            s = world("Amsterdam");
            o = world("Netherlands");
          }
          std::string text;
          try {
            text = gen.phrase_triple(brain, s, p, o, brain.robot(), pol, rctx);
            auto toks = tokenize(text);
            auto parsed = parser.parse_statement(toks, char_length(text), pctx);
            const auto* sp = std::get_if<StatementParse>(&parsed);
            out.check(sp != nullptr && sp->subject == s && sp->predicate == p &&
                          sp->object == o && sp->perspective.polarity.value_or(Polarity::kConfirm) == pol,
                      "\"" + text + "\" does not parse back");
          } catch (const Error& e) {
            out.check(false, p.compact() + ": " + e.what());
          }
          ++combos;
        }
      }
    }
  }
  if (out.ok) out.detail = "100 dumps, " + std::to_string(combos) + " sentences";
  return out;
}

Outcome determinism() {
  Outcome out;
  for (const char* name : {"d1.scn", "d2.scn", "d3.scn", "d4.scn"}) {
    Service a, b;
    auto ra = run_script(parse_script(read_scenario(name)), a);
    auto rb = run_script(parse_script(read_scenario(name)), b);
    std::string ta, tb;
    for (const auto& e : ra.transcript) ta += e.render() + "\n";
    for (const auto& e : rb.transcript) tb += e.render() + "\n";
    out.check(ta == tb, std::string(name) + " transcripts differ");
    out.check(a.dump() == b.dump(), std::string(name) + " dumps differ");
  }
  return out;
}

// A brain grown to 10,000 triples through ordinary statements.
std::unique_ptr<Brain> large_brain() {
  auto brain = std::make_unique<Brain>();
  std::mt19937 rng(10000);
  std::vector<Iri> people;
  for (char x = 'a'; x <= 'z'; ++x) {
    for (char y = 'a'; y <= 'f'; ++y) {
      people.push_back(brain->register_person(std::string("Q") + x + y));
    }
  }
  const char* likes[] = {"tea", "cats", "rabbits", "romantic movies", "pandas"};
  Date day;
  while (brain->store().size() < 10000) {
    const Iri& who = testing::pick(rng, people);
    ChatRecord chat = brain->open_chat(who, day);
    Iri place = world("City" + std::to_string(rng() % 60));
    brain->ensure_instance(place, place.local(), n2mu("Location"));
    brain->assert_statement(who, chat, "I am from there", {0, 15}, who, n2mu("isFrom"),
                            place, Perspective::parse("CONFIRM,CERTAIN"), day);
    std::string thing = likes[rng() % 5];
    std::replace(thing.begin(), thing.end(), ' ', '-');
    brain->assert_statement(who, chat, "I like it", {0, 9}, who, n2mu("likes"),
                            world(thing), Perspective::parse("CONFIRM"), day);
  }
  brain->register_person("Bram");
  return brain;
}

Outcome responsiveness() {
  Outcome out;
  auto brain = large_brain();
  std::size_t size = brain->store().size();
  Service svc(std::move(brain));
  int id = svc.open_session("Bram", 0.9).first;
  const std::vector<std::string> texts = {
      "Where is Qab from?", "I am from Mexico.", "Who is from City7?",
      "What does Qcd like?", "I like tea.", "Do you know Qzz?", "Qaa likes pandas.",
      "Have you seen a cat?", "I am a teacher.", "Where is Qfb from?"};
  std::vector<double> ms;
  for (int i = 0; i < 100; ++i) {
    auto start = Clock::now();
    svc.post_utterance(id, "Bram", texts[i % texts.size()], 0.9);
    ms.push_back(std::chrono::duration<double, std::milli>(Clock::now() - start).count());
  }
  std::sort(ms.begin(), ms.end());
  double median = (ms[49] + ms[50]) / 2;
  out.check(size >= 10000, "brain has only " + std::to_string(size) + " triples");
  out.check(median < 100, "median " + std::to_string(median) + " ms");
  std::ostringstream d;
  d.precision(3);
  d << size << " triples, median " << median << " ms, max " << ms.back() << " ms";
  out.detail = out.ok ? d.str() : out.detail + " (" + d.str() + ")";
  return out;
}

}  // namespace
}  // namespace tom

int main() {
  using Check = std::pair<const char*, std::function<tom::Outcome()>>;
  const Check checks[] = {
      {"dialogue 1, meeting a new person", tom::dialogue_one},
      {"dialogue 2, conflicting information", tom::dialogue_two},
      {"dialogue 3, checking information and trust", tom::dialogue_three},
      {"dialogue 4, observing the environment", tom::dialogue_four},
      {"laugh scenario graph", tom::laugh_graph},
      {"query oracle agreement", tom::query_oracle},
      {"dump and language round trips", tom::round_trip},
      {"replay determinism", tom::determinism},
      {"post_utterance responsiveness", tom::responsiveness},
  };
  int failed = 0;
  for (const auto& [name, run] : checks) {
    tom::Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " failing")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
