// base/text-utils-test.cc

// Copyright 2026  The spokenkit authors

// See ../../COPYING for clarification regarding multiple authors
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

#include "base/text-utils.h"

#include "doctest.h"

namespace spoken {

TEST_CASE("number formatting round-trips") {
  CHECK(FormatNumber(250) == "250");
  CHECK(FormatNumber(0.5) == "0.5");
  CHECK(FormatNumber(0) == "0");
  for (double v : {0.1, 1.25, 44.1, 1e-7, 123456.789}) {
    auto back = ParseNumber(FormatNumber(v));
    REQUIRE(back);
    CHECK(*back == v);
  }
  CHECK_FALSE(ParseNumber("12x"));
  CHECK_FALSE(ParseNumber(""));
  CHECK_FALSE(ParseNumber("nan"));
}

TEST_CASE("identifier helpers") {
  CHECK(StripHash("#T3") == "T3");
  CHECK(StripHash("T3") == "T3");
  CHECK(IsBadIdentifier("#NC"));
  CHECK(IsBadIdentifier("a b"));
  CHECK_FALSE(IsBadIdentifier("Ncms__"));
  CHECK(IsGeneratedId("~auto1"));
  CHECK(IsGeneratedId("u_SPK0#1"));
  CHECK_FALSE(IsGeneratedId("T4bar"));
}

TEST_CASE("splitting") {
  CHECK(Split("a\t\tb", '\t') == std::vector<std::string>{"a", "", "b"});
  CHECK(SplitWhitespace(" #NC  #mas\n#sing ") ==
        std::vector<std::string>{"#NC", "#mas", "#sing"});
  CHECK(Trim("  x y \n") == "x y");
  CHECK(NormalizeSpace("  Alors      ça\n depend ") == "Alors ça depend");
}

}  // namespace spoken
