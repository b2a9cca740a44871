// tests/eaf_test.cc
//
// Copyright 2024  Redial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "redial/eaf.hpp"

#include <string>

#include "gtest/gtest.h"
#include "redial/errors.hpp"

namespace redial {
namespace {

// Hand-rolled document with scrambled slot order, whitespace around values,
// unknown sections, and a second tier.
const char kSample[] = R"(<?xml version="1.0" encoding="UTF-8"?>
<ANNOTATION_DOCUMENT AUTHOR="op" DATE="2022-11-05T10:00:00+01:00" FORMAT="3.0" VERSION="3.0">
    <HEADER MEDIA_FILE="" TIME_UNITS="milliseconds">
        <MEDIA_DESCRIPTOR MEDIA_URL="EN_001.wav" MIME_TYPE="audio/x-wav"/>
        <PROPERTY NAME="lastUsedAnnotationId">3</PROPERTY>
    </HEADER>
    <TIME_ORDER>
        <TIME_SLOT TIME_SLOT_ID="ts3" TIME_VALUE="2000"/>
        <TIME_SLOT TIME_SLOT_ID="ts4" TIME_VALUE="2500"/>
        <TIME_SLOT TIME_SLOT_ID="ts1" TIME_VALUE="100"/>
        <TIME_SLOT TIME_SLOT_ID="ts2" TIME_VALUE="900"/>
        <TIME_SLOT TIME_SLOT_ID="ts5" TIME_VALUE="3000"/>
        <TIME_SLOT TIME_SLOT_ID="ts6" TIME_VALUE="3400"/>
    </TIME_ORDER>
    <TIER LINGUISTIC_TYPE_REF="default-lt" TIER_ID="Utterance">
        <ANNOTATION>
            <ALIGNABLE_ANNOTATION ANNOTATION_ID="a2" TIME_SLOT_REF1="ts3" TIME_SLOT_REF2="ts4">
                <ANNOTATION_VALUE>  #2 </ANNOTATION_VALUE>
            </ALIGNABLE_ANNOTATION>
        </ANNOTATION>
        <ANNOTATION>
            <ALIGNABLE_ANNOTATION ANNOTATION_ID="a1" TIME_SLOT_REF1="ts1" TIME_SLOT_REF2="ts2">
                <ANNOTATION_VALUE>1</ANNOTATION_VALUE>
            </ALIGNABLE_ANNOTATION>
        </ANNOTATION>
    </TIER>
    <TIER LINGUISTIC_TYPE_REF="default-lt" TIER_ID="LittleLeft">
        <ANNOTATION>
            <ALIGNABLE_ANNOTATION ANNOTATION_ID="a3" TIME_SLOT_REF1="ts5" TIME_SLOT_REF2="ts6">
                <ANNOTATION_VALUE>7</ANNOTATION_VALUE>
            </ALIGNABLE_ANNOTATION>
        </ANNOTATION>
    </TIER>
    <LINGUISTIC_TYPE GRAPHIC_REFERENCES="false" LINGUISTIC_TYPE_ID="default-lt" TIME_ALIGNABLE="true"/>
    <LOCALE LANGUAGE_CODE="en"/>
</ANNOTATION_DOCUMENT>
)";

TEST(EafTest, ParsesTiersSortedAndTrimmed) {
  MarkupDocument doc = parse_eaf(kSample);
  EXPECT_EQ(doc.media_descriptors, (std::vector<std::string>{"EN_001.wav"}));
  ASSERT_EQ(doc.tiers.size(), 2u);
  EXPECT_EQ(doc.tiers[0].name, "Utterance");
  ASSERT_EQ(doc.tiers[0].annotations.size(), 2u);
  // Sorted by start even though the file lists a2 first; value trimmed.
  EXPECT_EQ(doc.tiers[0].annotations[0], (Annotation{"1", 100, 900}));
  EXPECT_EQ(doc.tiers[0].annotations[1], (Annotation{"#2", 2000, 2500}));
  EXPECT_EQ(doc.tiers[1].name, "LittleLeft");
  ASSERT_NE(doc.FindTier("LittleLeft"), nullptr);
  EXPECT_EQ(doc.FindTier("Nope"), nullptr);
}

std::string Wrap(const std::string &body) {
  return "<ANNOTATION_DOCUMENT>" + body + "</ANNOTATION_DOCUMENT>";
}

std::string OneAnnotationTier(const std::string &tier, const std::string &value) {
  return Wrap(
      "<TIME_ORDER>"
      "<TIME_SLOT TIME_SLOT_ID=\"ts1\" TIME_VALUE=\"0\"/>"
      "<TIME_SLOT TIME_SLOT_ID=\"ts2\" TIME_VALUE=\"10\"/>"
      "</TIME_ORDER>"
      "<TIER TIER_ID=\"" + tier + "\"><ANNOTATION>"
      "<ALIGNABLE_ANNOTATION ANNOTATION_ID=\"a1\" TIME_SLOT_REF1=\"ts1\" TIME_SLOT_REF2=\"ts2\">"
      "<ANNOTATION_VALUE>" + value + "</ANNOTATION_VALUE>"
      "</ALIGNABLE_ANNOTATION></ANNOTATION></TIER>");
}

TEST(EafTest, RejectsWrongRootElement) {
  EXPECT_THROW(parse_eaf("<DOCUMENT/>"), ParseError);
}

TEST(EafTest, RejectsControlledVocabulary) {
  EXPECT_THROW(parse_eaf(Wrap("<CONTROLLED_VOCABULARY CV_ID=\"x\"/>")), ParseError);
}

TEST(EafTest, RejectsReferenceAnnotations) {
  std::string body =
      "<TIER TIER_ID=\"Utterance\"><ANNOTATION>"
      "<REF_ANNOTATION ANNOTATION_ID=\"a1\" ANNOTATION_REF=\"a0\">"
      "<ANNOTATION_VALUE>x</ANNOTATION_VALUE></REF_ANNOTATION>"
      "</ANNOTATION></TIER>";
  try {
    parse_eaf(Wrap(body));
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("Utterance"), std::string::npos) << e.what();
  }
}

TEST(EafTest, RejectsDuplicateTimeSlotIds) {
  EXPECT_THROW(parse_eaf(Wrap("<TIME_ORDER>"
                              "<TIME_SLOT TIME_SLOT_ID=\"ts1\" TIME_VALUE=\"0\"/>"
                              "<TIME_SLOT TIME_SLOT_ID=\"ts1\" TIME_VALUE=\"5\"/>"
                              "</TIME_ORDER>")),
               ParseError);
}

TEST(EafTest, RejectsNonMillisecondTimeValue) {
  EXPECT_THROW(
      parse_eaf(Wrap("<TIME_ORDER><TIME_SLOT TIME_SLOT_ID=\"ts1\" TIME_VALUE=\"1.5s\"/>"
                     "</TIME_ORDER>")),
      ParseError);
  EXPECT_THROW(
      parse_eaf(Wrap("<TIME_ORDER><TIME_SLOT TIME_SLOT_ID=\"ts1\" TIME_VALUE=\"-4\"/>"
                     "</TIME_ORDER>")),
      ParseError);
}

TEST(EafTest, RejectsUnknownSlotReference) {
  std::string body =
      "<TIME_ORDER><TIME_SLOT TIME_SLOT_ID=\"ts1\" TIME_VALUE=\"0\"/></TIME_ORDER>"
      "<TIER TIER_ID=\"Utterance\"><ANNOTATION>"
      "<ALIGNABLE_ANNOTATION ANNOTATION_ID=\"a1\" TIME_SLOT_REF1=\"ts1\" TIME_SLOT_REF2=\"ts9\">"
      "<ANNOTATION_VALUE>1</ANNOTATION_VALUE></ALIGNABLE_ANNOTATION>"
      "</ANNOTATION></TIER>";
  try {
    parse_eaf(Wrap(body));
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    std::string what = e.what();
    EXPECT_NE(what.find("a1"), std::string::npos) << what;
    EXPECT_NE(what.find("ts9"), std::string::npos) << what;
  }
}

TEST(EafTest, RejectsUnvaluedSlotReference) {
  std::string body =
      "<TIME_ORDER>"
      "<TIME_SLOT TIME_SLOT_ID=\"ts1\" TIME_VALUE=\"0\"/>"
      "<TIME_SLOT TIME_SLOT_ID=\"ts2\"/>"
      "</TIME_ORDER>"
      "<TIER TIER_ID=\"Utterance\"><ANNOTATION>"
      "<ALIGNABLE_ANNOTATION ANNOTATION_ID=\"a1\" TIME_SLOT_REF1=\"ts1\" TIME_SLOT_REF2=\"ts2\">"
      "<ANNOTATION_VALUE>1</ANNOTATION_VALUE></ALIGNABLE_ANNOTATION>"
      "</ANNOTATION></TIER>";
  EXPECT_THROW(parse_eaf(Wrap(body)), ParseError);
}

TEST(EafTest, RejectsMissingSlotReferenceAttribute) {
  std::string body =
      "<TIME_ORDER><TIME_SLOT TIME_SLOT_ID=\"ts1\" TIME_VALUE=\"0\"/></TIME_ORDER>"
      "<TIER TIER_ID=\"Utterance\"><ANNOTATION>"
      "<ALIGNABLE_ANNOTATION ANNOTATION_ID=\"a1\" TIME_SLOT_REF1=\"ts1\">"
      "<ANNOTATION_VALUE>1</ANNOTATION_VALUE></ALIGNABLE_ANNOTATION>"
      "</ANNOTATION></TIER>";
  EXPECT_THROW(parse_eaf(Wrap(body)), ParseError);
}

TEST(EafTest, RejectsEmptyOrWhitespaceValue) {
  EXPECT_THROW(parse_eaf(OneAnnotationTier("Utterance", "")), ParseError);
  EXPECT_THROW(parse_eaf(OneAnnotationTier("Utterance", "   ")), ParseError);
}

TEST(EafTest, RejectsNonPositiveSpan) {
  std::string body =
      "<TIME_ORDER>"
      "<TIME_SLOT TIME_SLOT_ID=\"ts1\" TIME_VALUE=\"50\"/>"
      "<TIME_SLOT TIME_SLOT_ID=\"ts2\" TIME_VALUE=\"50\"/>"
      "</TIME_ORDER>"
      "<TIER TIER_ID=\"Utterance\"><ANNOTATION>"
      "<ALIGNABLE_ANNOTATION ANNOTATION_ID=\"a1\" TIME_SLOT_REF1=\"ts1\" TIME_SLOT_REF2=\"ts2\">"
      "<ANNOTATION_VALUE>1</ANNOTATION_VALUE></ALIGNABLE_ANNOTATION>"
      "</ANNOTATION></TIER>";
  EXPECT_THROW(parse_eaf(Wrap(body)), ParseError);
}

TEST(EafTest, RejectsDuplicateTierNames) {
  EXPECT_THROW(
      parse_eaf(Wrap("<TIER TIER_ID=\"Utterance\"/><TIER TIER_ID=\"Utterance\"/>")),
      ParseError);
}

TEST(EafTest, RejectsTierWithoutId) {
  EXPECT_THROW(parse_eaf(Wrap("<TIER LINGUISTIC_TYPE_REF=\"default-lt\"/>")), ParseError);
}

TEST(EafTest, IgnoresUnknownSectionsAndAnnotationSiblings) {
  MarkupDocument doc = parse_eaf(Wrap(
      "<LICENSE/><LOCALE LANGUAGE_CODE=\"en\"/><CONSTRAINT STEREOTYPE=\"x\"/>"
      "<TIER TIER_ID=\"Notes\"><SOMETHING/></TIER>"));
  ASSERT_EQ(doc.tiers.size(), 1u);
  EXPECT_TRUE(doc.tiers[0].annotations.empty());
}

MarkupDocument SampleDocument() {
  MarkupDocument doc;
  doc.media_descriptors = {"EN_001.wav"};
  doc.tiers.push_back(Tier{"Utterance",
                           {Annotation{"1", 100, 900}, Annotation{"DELETE", 950, 1200},
                            Annotation{"#2", 2000, 2500}}});
  doc.tiers.push_back(Tier{"LittleLeft", {Annotation{"3.14", 0, 80}}});
  doc.tiers.push_back(Tier{"Weird & <Tier>", {Annotation{"a \"b\" & <c>", 5, 9}}});
  return doc;
}

TEST(EafTest, SerializeParseRoundTripIsExact) {
  MarkupDocument doc = SampleDocument();
  MarkupDocument back = parse_eaf(serialize_eaf(doc));
  EXPECT_TRUE(back == doc);
}

TEST(EafTest, SerializeIsDeterministic) {
  EXPECT_EQ(serialize_eaf(SampleDocument()), serialize_eaf(SampleDocument()));
}

TEST(EafTest, SerializeRejectsInvalidDocuments) {
  MarkupDocument dup;
  dup.tiers = {Tier{"Utterance", {}}, Tier{"Utterance", {}}};
  EXPECT_THROW(serialize_eaf(dup), SerializeError);

  MarkupDocument empty_value;
  empty_value.tiers = {Tier{"Utterance", {Annotation{"", 0, 10}}}};
  EXPECT_THROW(serialize_eaf(empty_value), SerializeError);

  MarkupDocument untrimmed;
  untrimmed.tiers = {Tier{"Utterance", {Annotation{" 1", 0, 10}}}};
  EXPECT_THROW(serialize_eaf(untrimmed), SerializeError);

  MarkupDocument bad_span;
  bad_span.tiers = {Tier{"Utterance", {Annotation{"1", 10, 10}}}};
  EXPECT_THROW(serialize_eaf(bad_span), SerializeError);

  MarkupDocument negative;
  negative.tiers = {Tier{"Utterance", {Annotation{"1", -5, 10}}}};
  EXPECT_THROW(serialize_eaf(negative), SerializeError);

  MarkupDocument unsorted;
  unsorted.tiers = {
      Tier{"Utterance", {Annotation{"2", 100, 200}, Annotation{"1", 0, 50}}}};
  EXPECT_THROW(serialize_eaf(unsorted), SerializeError);
}

}  // namespace
}  // namespace redial
