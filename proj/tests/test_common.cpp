// Copyright 2026 The mab Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance
// with the License. You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under the License.

#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>

#include "mab/common/error.hpp"
#include "mab/common/http.hpp"
#include "mab/common/io.hpp"
#include "mab/common/parallel.hpp"
#include "mab/common/retry.hpp"
#include "mab/common/text.hpp"
#include "support.hpp"

using namespace mab;

TEST(Text, TrimAndBlank) {
  EXPECT_EQ(text::trim("  a b \n\t"), "a b");
  EXPECT_EQ(text::trim(""), "");
  EXPECT_TRUE(text::is_blank(" \t\r\n"));
  EXPECT_FALSE(text::is_blank(" x "));
}

TEST(Text, WordsFoldCaseAndSplitOnPunctuation) {
  const std::vector<std::string> want = {"bus", "route", "25", "caf", "s"};
  EXPECT_EQ(text::words("Bus-Route 25: Caf\xC3\xA9s"), want);
  EXPECT_TRUE(text::words("  ,,  ").empty());
}

TEST(Text, SplitWhitespaceAndJoin) {
  const auto parts = text::split_whitespace(" a  b\tc\n");
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(text::join(parts, ", "), "a, b, c");
  EXPECT_EQ(text::join({}, ", "), "");
}

TEST(Text, StopwordsAreTheFrozenList) {
  const auto& s = text::english_stopwords();
  EXPECT_EQ(s.size(), 318u);
  for (const char* w : {"the", "and", "of", "for", "whereafter", "yourselves"}) EXPECT_TRUE(s.contains(w)) << w;
  EXPECT_FALSE(s.contains("london"));
}

TEST(Text, Utf8Helpers) {
  const std::string s = "a\xC3\xA9\xE2\x80\xA6z";  // a, e-acute, ellipsis, z
  EXPECT_EQ(text::utf8_length(s), 4u);
  EXPECT_EQ(text::utf8_prefix(s, 2), "a\xC3\xA9");
  EXPECT_EQ(text::utf8_prefix(s, 10), s);
  EXPECT_TRUE(text::ends_with_icase("DATA.CSV", ".csv"));
  EXPECT_FALSE(text::ends_with_icase("csv", ".csv"));
}

TEST(Io, WriteCreatesParentsAndReadRoundTrips) {
  testkit::TempDir dir;
  const auto p = dir / "a/b/c.txt";
  io::write_file(p, "hello\n");
  EXPECT_EQ(io::read_file(p), "hello\n");
  io::write_file(p, "x");
  EXPECT_EQ(io::read_file(p), "x");
  EXPECT_THROW(io::read_file(dir / "missing"), DataError);
}

TEST(Retry, RetriesTransientUntilSuccess) {
  RetryPolicy policy{3, std::chrono::milliseconds(0)};
  int calls = 0;
  const int v = retry_call(policy, [&](int attempt) {
    ++calls;
    if (attempt < 2) throw BackendError("flaky", 503, true);
    return 7;
  });
  EXPECT_EQ(v, 7);
  EXPECT_EQ(calls, 3);
}

TEST(Retry, GivesUpAfterMaxRetries) {
  RetryPolicy policy{2, std::chrono::milliseconds(0)};
  int calls = 0;
  EXPECT_THROW(retry_call(policy,
                          [&](int) -> int {
                            ++calls;
                            throw BackendError("down", 503, true);
                          }),
               BackendError);
  EXPECT_EQ(calls, 3);
}

TEST(Retry, PermanentErrorsAreNotRetried) {
  RetryPolicy policy{5, std::chrono::milliseconds(0)};
  int calls = 0;
  EXPECT_THROW(retry_call(policy,
                          [&](int) -> int {
                            ++calls;
                            throw BackendError("denied", 401, false);
                          }),
               BackendError);
  EXPECT_EQ(calls, 1);
}

TEST(Retry, BackoffDoubles) {
  RetryPolicy p{3, std::chrono::milliseconds(100)};
  EXPECT_EQ(p.delay_after(0).count(), 100);
  EXPECT_EQ(p.delay_after(1).count(), 200);
  EXPECT_EQ(p.delay_after(3).count(), 800);
}

TEST(Parallel, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, RethrowsFirstError) {
  EXPECT_THROW(parallel_for(100, 4,
                            [](std::size_t i) {
                              if (i == 17) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(Http, SplitUrl) {
  const auto [base, path] = http::split_url("https://api.example.org:8443/v1/chat");
  EXPECT_EQ(base, "https://api.example.org:8443");
  EXPECT_EQ(path, "/v1/chat");
  EXPECT_EQ(http::split_url("http://h").second, "/");
  EXPECT_THROW(http::split_url("ftp//nope"), ConfigError);
}

TEST(Http, TransientStatuses) {
  for (int s : {500, 502, 503, 504, 408, 429}) EXPECT_TRUE(http::is_transient_status(s)) << s;
  for (int s : {200, 400, 401, 403, 404, 422}) EXPECT_FALSE(http::is_transient_status(s)) << s;
}

TEST(Http, PostJsonAgainstStub) {
  testkit::StubServer server;
  server.post("/echo", [](const httplib::Request& req, httplib::Response& res) {
    res.set_content(req.get_header_value("Authorization") + "|" + req.body, "text/plain");
  });
  server.start();
  ::setenv("MAB_TEST_KEY", "sekret", 1);
  http::Headers h;
  http::add_bearer_from_env(h, "MAB_TEST_KEY");
  const auto r = http::post_json(server.url("/echo"), "{}", h, std::chrono::milliseconds(2000));
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body, "Bearer sekret|{}");
}

TEST(Http, TransportFailureIsTransient) {
  try {
    http::post_json("http://127.0.0.1:1/x", "{}", {}, std::chrono::milliseconds(300));
    FAIL();
  } catch (const BackendError& e) {
    EXPECT_TRUE(e.transient());
    EXPECT_EQ(e.status(), 0);
  }
}
