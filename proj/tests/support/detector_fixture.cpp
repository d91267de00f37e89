// Copyright 2026 The ugceval Authors
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

#include "support/detector_fixture.hpp"

#include <functional>

namespace testutil {

namespace {

using ugceval::PhenomenonKind;
using K = PhenomenonKind;

// Filler material chosen to be inert: no lexicon surfaces, no letter runs
// of three, no unusual casing, capitalized opener.
const char* kEnOpen[] = {"Update", "Note", "Recap", "Report", "Meanwhile"};
const char* kEnTail[] = {" tonight.", " today.", " again.", " for sure.",
                         " somehow."};
const char* kFrOpen[] = {"Alors", "Bref", "Hier", "Ensuite", "Franchement"};
const char* kFrTail[] = {" ce soir.", " encore.", " vraiment.", " sans doute.",
                         " bizarrement."};

using Pattern = std::function<LineBuilder(int)>;

std::vector<Pattern> patterns() {
  std::vector<Pattern> out;
  auto en = [](int v) { return std::string(kEnOpen[v % 5]); };
  auto ent = [](int v) { return std::string(kEnTail[v % 5]); };
  auto fr = [](int v) { return std::string(kFrOpen[v % 5]); };
  auto frt = [](int v) { return std::string(kFrTail[v % 5]); };

  // --- word elongation -----------------------------------------------------
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" the fans yelled ").atom("gooooaaaalllll", K::WordElongation, "goal").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" that was ").atom("niceeee", K::WordElongation, "nice");
    return b;  // final letter claimed by the span: no missing-terminal mark
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" keep it ").atom("coooool", K::WordElongation, "cool").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" ").atom("NOOOO", K::WordElongation, "NO").plain(" moment").plain(ent(v));
    return b;  // elongation outranks the all-caps rule
  });
  out.push_back([=](int v) {
    LineBuilder b("fr");
    b.plain(fr(v)).plain(" ").atom("ouiii", K::WordElongation, "oui").plain(" c'est fou").plain(frt(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("fr");
    b.plain(fr(v)).plain(" c'est ").atom("suuuper", K::WordElongation, "super").plain(frt(v));
    return b;
  });

  // --- capitalisation ------------------------------------------------------
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" the answer was ").atom("NOPE", K::Capitalisation, "nope").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" he wrote ").atom("SoRry", K::Capitalisation, "sorry").plain(" twice").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" the ").atom("USA", K::Capitalisation, "usa").plain(" squad arrived").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" that ").atom("MiXeD", K::Capitalisation, "mixed").plain(" style stays").plain(ent(v));
    return b;
  });
  out.push_back([](int) {
    LineBuilder b("en");
    b.zero_span(K::Capitalisation).plain("the team played well today.");
    return b;
  });
  out.push_back([](int) {
    LineBuilder b("fr");
    b.zero_span(K::Capitalisation).plain("le match commence demain soir.");
    return b;
  });

  // --- informal abbreviations and acronyms ---------------------------------
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" ").atom("gonna", K::InformalAbbreviation, "going to").plain(" review later").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" ").atom("u", K::InformalAbbreviation, "you").plain(" called it").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" busy ").atom("rn", K::InformalAbbreviation, "right now").plain(" sadly").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("fr");
    b.plain(fr(v)).plain(" ").atom("mtn", K::InformalAbbreviation, "maintenant").plain(" ça change").plain(frt(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" ").atom("lol", K::InformalAcronym, "laughing out loud", true).plain(" that was it").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" ").atom("OMG", K::InformalAcronym, "oh my god", true).plain(" it happened").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" ").atom("tbh", K::InformalAcronym, "to be honest").plain(" it was fine").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" ").atom("idk", K::InformalAcronym, "I don't know").plain(" about that").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" ").atom("LOL", K::InformalAcronym, "laughing out loud", true).plain(" indeed").plain(ent(v));
    return b;  // uppercase form resolves as acronym, not capitalisation
  });
  out.push_back([=](int v) {
    LineBuilder b("fr");
    b.plain(fr(v)).plain(" ").atom("mdr", K::InformalAcronym, "mort de rire", true).plain(" ce moment").plain(frt(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" ").atom("wtf", K::InformalAcronym, "what the fuck").plain(" moment").plain(ent(v));
    return b;
  });

  // --- hashtags, subreddits, entities --------------------------------------
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" see ").atom("#lrt", K::HashtagSubreddit).plain(" for context").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" tags ").atom("#USA", K::HashtagSubreddit).plain(" ").atom("#WorldCup", K::HashtagSubreddit).plain(" trended").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" posted on ").atom("r/soccer", K::HashtagSubreddit).plain(" today").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" thanks ").atom("@JulieTom62", K::EntityUrlMentionRt).plain(" for the clip").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" source ").atom("http://t.co/abc", K::EntityUrlMentionRt).plain(" covers it").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" link ").atom("https://x.co/#frag", K::EntityUrlMentionRt).plain(" works").plain(ent(v));
    return b;  // the hashtag inside the URL is part of the URL
  });
  out.push_back([](int) {
    LineBuilder b("en");
    b.atom("RT", K::EntityUrlMentionRt).plain(" ").atom("@a", K::EntityUrlMentionRt)
        .plain(" ").atom("http://x.co", K::EntityUrlMentionRt).plain(" ")
        .atom("#b", K::HashtagSubreddit).plain(" ").atom("#c", K::HashtagSubreddit);
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("fr");
    b.plain(fr(v)).plain(" contact ").atom("@JulieTom62", K::EntityUrlMentionRt).plain(" demain").plain(frt(v));
    return b;
  });

  // --- emoticons and emoji --------------------------------------------------
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" the result was sad ").atom(":((", K::EmoticonEmoji).plain(" honestly").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" mood ").atom(":-)", K::EmoticonEmoji).plain(" overall").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" reaction ").atom("^^", K::EmoticonEmoji).plain(" noted").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" ").atom("<3", K::EmoticonEmoji).plain(" that team").plain(ent(v));
    return b;
  });
  out.push_back([](int) {
    LineBuilder b("en");
    b.plain("Match over ").atom("😂", K::EmoticonEmoji).plain(" what a night.");
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("fr");
    b.plain(fr(v)).plain(" le score ").atom("😂😂", K::EmoticonEmoji).plain(" incroyable").plain(frt(v));
    return b;
  });
  out.push_back([](int) {
    LineBuilder b("en");
    b.plain("Note price (3) stayed flat today.");  // parenthesis, no emoticon
    return b;
  });

  // --- atypical punctuation -------------------------------------------------
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" really").atom("??", K::AtypicalPunctuation, "?");
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" wait").atom("...", K::AtypicalPunctuation, ".").plain(" more later").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" seriously").atom("?!", K::AtypicalPunctuation, "?");
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("fr");
    b.plain(fr(v)).plain(" pourquoi").atom("?!", K::AtypicalPunctuation, "?");
    return b;
  });
  out.push_back([](int) {
    LineBuilder b("en");
    b.plain("Update the match ended early").zero_span(K::AtypicalPunctuation);
    return b;
  });
  out.push_back([](int) {
    LineBuilder b("fr");
    b.plain("Alors la partie se termine").zero_span(K::AtypicalPunctuation);
    return b;
  });
  out.push_back([](int) {
    LineBuilder b("en");
    b.plain("Update score was 3.5 to 1,000 tonight.");  // digit punctuation is standard
    return b;
  });

  // --- profanity -------------------------------------------------------------
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" that call was ").atom("fuck", K::OvertProfanity, "fuck").plain(" awful").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" the ruling was ").atom("crap", K::OvertProfanity, "crap").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("fr");
    b.plain(fr(v)).plain(" ").atom("merde", K::OvertProfanity, "merde").plain(" alors").plain(frt(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("fr");
    b.plain(fr(v)).plain(" un réveil ").atom("casse couille", K::OvertProfanity, "casse-couilles").plain(" hier").plain(frt(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" he typed ").atom("f*ck", K::SelfCensoredProfanity, "fuck").plain(" twice").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("en");
    b.plain(en(v)).plain(" she wrote ").atom("sh**", K::SelfCensoredProfanity, "shit").plain(" then left").plain(ent(v));
    return b;
  });
  out.push_back([=](int v) {
    LineBuilder b("fr");
    b.plain(fr(v)).plain(" il a dit ").atom("m*rde", K::SelfCensoredProfanity, "merde").plain(" encore une fois").plain(frt(v));
    return b;
  });

  // --- combinations ----------------------------------------------------------
  out.push_back([](int) {
    LineBuilder b("en");
    b.plain("Match was ").atom("niceeee", K::WordElongation, "nice").plain(" ")
        .atom("#WorldCup", K::HashtagSubreddit).plain(" ").atom("😂", K::EmoticonEmoji);
    return b;
  });
  out.push_back([](int) {
    LineBuilder b("en");
    b.zero_span(K::Capitalisation).plain("dont ").atom("fuck", K::OvertProfanity, "fuck")
        .plain(" with Merica ").atom("#USA", K::HashtagSubreddit).plain(" ")
        .atom("#WorldCup", K::HashtagSubreddit);
    return b;
  });
  out.push_back([](int) {
    LineBuilder b("en");
    b.plain("Update ").atom("OMG", K::InformalAcronym, "oh my god", true)
        .plain(" it's terribl-").atom("....", K::AtypicalPunctuation, ".")
        .atom("yyy", K::WordElongation, "y").plain(" funny!");
    return b;
  });
  out.push_back([](int) {
    LineBuilder b("fr");
    b.zero_span(K::Capitalisation).plain("même pas besoin de regarder le match ")
        .atom("😂", K::EmoticonEmoji);
    return b;
  });

  return out;
}

}  // namespace

std::vector<LineBuilder> build_detector_fixture() {
  std::vector<LineBuilder> lines;
  const std::vector<Pattern> all = patterns();
  int variant = 0;
  while (lines.size() < 200) {
    for (const Pattern& pattern : all) {
      if (lines.size() >= 200) break;
      lines.push_back(pattern(variant));
    }
    ++variant;
  }
  return lines;
}

}  // namespace testutil
