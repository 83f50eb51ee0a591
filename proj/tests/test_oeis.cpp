#include <atomic>
#include <filesystem>
#include <random>
#include <thread>

#include "doctest.h"
#include "egfasym/error.hpp"
#include "egfasym/oeis.hpp"
#include "test_support.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

using namespace egfasym;
using egfasym::testing::family;
using egfasym::testing::fixture_bfile;
using egfasym::testing::fixture_path;
using egfasym::testing::read_text;

namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("egfasym-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

/// Serves fixture b-files; /A000503 fails once with 503, everything else 404.
struct FixtureServer {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<int> hits{0};
  std::atomic<int> flaky_hits{0};

  FixtureServer() {
    server.Get(R"(/(A\d{6})/b(\d{6})\.txt)", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits;
      const std::string anum = req.matches[1];
      if (anum == "A000503") {
        if (flaky_hits++ == 0) {
          res.status = 503;
          return;
        }
        res.set_content("0 5\n1 0\n2 3\n", "text/plain");
        return;
      }
      if (anum == "A000666") {
        res.set_content("0 1\n1 x\n", "text/plain");
        return;
      }
      const fs::path p = fixture_path("b" + anum.substr(1) + ".txt");
      if (!fs::exists(p)) {
        res.status = 404;
        return;
      }
      res.set_content(read_text(p.string()), "text/plain");
    });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~FixtureServer() {
    server.stop();
    thread.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port); }
};

FetchOptions options_for(const fs::path& cache, const std::string& url) {
  FetchOptions o;
  o.cache_dir = cache;
  o.base_url = url;
  o.timeout = std::chrono::milliseconds(2000);
  o.retry_backoff = std::chrono::milliseconds(10);
  return o;
}

}  // namespace

TEST_CASE("parse_bfile") {
  const BFile b = parse_bfile("# comment\n0 1\n1 1\n2 4\n", "A143405");
  REQUIRE(b.size() == 3);
  CHECK(b.entries[2].first == 2);
  CHECK(b.entries[2].second == 4);
  CHECK(*b.find(1) == 1);
  CHECK(b.find(3) == nullptr);

  const BFile spaced = parse_bfile("\r\n  #x\n\n 5\t  -12  \r\n6 340282366920938463463374607431768211457\n");
  CHECK(spaced.first_index() == 5);
  CHECK(spaced.entries[0].second == -12);
  CHECK(spaced.entries[1].second == mpz_class("340282366920938463463374607431768211457"));

  CHECK(kind_of([] { parse_bfile("0 1\n2 4\n"); }) == ErrorKind::NonContiguousIndex);
  CHECK(kind_of([] { parse_bfile("0 abc\n"); }) == ErrorKind::MalformedLine);
  CHECK(kind_of([] { parse_bfile("0\n"); }) == ErrorKind::MalformedLine);
  CHECK(kind_of([] { parse_bfile("0 1 2\n"); }) == ErrorKind::MalformedLine);
  CHECK(kind_of([] { parse_bfile("# only\n\n"); }) == ErrorKind::Empty);
}

TEST_CASE("serialize then parse is the identity") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    BFile b{"A000001", {}};
    const std::int64_t start = static_cast<std::int64_t>(rng() % 5) - 1;
    const int len = 1 + static_cast<int>(rng() % 40);
    for (int k = 0; k < len; ++k) {
      mpz_class v(std::to_string(rng()));
      v *= v;
      if (rng() % 3 == 0) v = -v;
      b.entries.emplace_back(start + k, v);
    }
    const BFile back = parse_bfile(serialize(b), "A000001");
    CHECK(back.entries == b.entries);
  }
  const BFile fx = fixture_bfile("A002874");
  CHECK(parse_bfile(serialize(fx)).entries == fx.entries);
}

TEST_CASE("anum and paths") {
  CHECK(is_valid_anum("A143405"));
  CHECK_FALSE(is_valid_anum("A14340"));
  CHECK_FALSE(is_valid_anum("B143405"));
  CHECK_FALSE(is_valid_anum("A14340x"));
  CHECK(bfile_url("https://oeis.org/", "A143405") == "https://oeis.org/A143405/b143405.txt");
  CHECK(bfile_cache_path("/c", "A143405") == fs::path("/c/bfiles/b143405.txt"));
  CHECK(kind_of([] { fetch_bfile("143405"); }) == ErrorKind::InvalidAnum);
}

TEST_CASE("fetch: cold fetch stores the cache, warm cache needs no network") {
  TempDir tmp;
  FixtureServer server;
  const BFile cold = fetch_bfile("A143405", options_for(tmp.path, server.url()));
  CHECK(server.hits == 1);
  REQUIRE(cold.size() >= 3);
  CHECK(cold.entries[0].second == 1);
  CHECK(cold.entries[1].second == 1);
  CHECK(cold.entries[2].second == 4);
  const fs::path cached = bfile_cache_path(tmp.path, "A143405");
  CHECK(read_text(cached.string()) == read_text(fixture_path("b143405.txt")));

  // no leftover temporaries
  for (const auto& entry : fs::directory_iterator(cached.parent_path())) {
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  }

  const BFile warm = fetch_bfile("A143405", options_for(tmp.path, "http://127.0.0.1:9"));
  CHECK(server.hits == 1);
  CHECK(warm.entries == cold.entries);
}

TEST_CASE("fetch: HTTP errors") {
  TempDir tmp;
  FixtureServer server;
  try {
    fetch_bfile("A999999", options_for(tmp.path, server.url()));
    FAIL("expected NetworkError");
  } catch (const NetworkError& e) {
    CHECK(e.status() == 404);
    CHECK(e.url() == server.url() + "/A999999/b999999.txt");
    CHECK(e.kind() == ErrorKind::NetworkError);
  }
  CHECK(server.hits == 1);  // no retry on 404
  CHECK_FALSE(fs::exists(bfile_cache_path(tmp.path, "A999999")));

  // one transient failure is retried once
  const BFile b = fetch_bfile("A000503", options_for(tmp.path, server.url()));
  CHECK(server.flaky_hits == 2);
  CHECK(b.size() == 3);

  // parse failures keep the cached body for inspection
  CHECK(kind_of([&] { fetch_bfile("A000666", options_for(tmp.path, server.url())); }) == ErrorKind::ParseError);
  CHECK(fs::exists(bfile_cache_path(tmp.path, "A000666")));

  // unreachable host: transport failure, status 0
  try {
    fetch_bfile("A000001", options_for(tmp.path, "http://127.0.0.1:9"));
    FAIL("expected NetworkError");
  } catch (const NetworkError& e) {
    CHECK(e.status() == 0);
  }
}

TEST_CASE("atomic write replaces content wholesale") {
  TempDir tmp;
  const fs::path p = tmp.path / "bfiles" / "b000001.txt";
  write_file_atomically(p, "0 1\n");
  write_file_atomically(p, "0 2\n1 3\n");
  CHECK(read_text(p.string()) == "0 2\n1 3\n");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(p.parent_path())) ++files;
  CHECK(files == 1);
}

TEST_CASE("compare_prefix") {
  const BFile ref = fixture_bfile("A143405");
  const CoeffTable t = egf_coefficients(family("A143405"), 100);
  const ComparisonReport ok = compare_prefix(t, ref, 101);
  CHECK(ok.matched == 101);
  CHECK_FALSE(ok.first_mismatch);

  BFile corrupted = ref;
  corrupted.entries[5].second += 1;
  const ComparisonReport bad = compare_prefix(t, corrupted, 101);
  CHECK(bad.matched == 5);
  REQUIRE(bad.first_mismatch);
  CHECK(bad.first_mismatch->index == 5);
  CHECK(bad.first_mismatch->got == t.exact()[5].get_str());

  // same data re-indexed from 1
  BFile shifted = ref;
  for (auto& e : shifted.entries) e.first += 1;
  const ComparisonReport aligned = compare_prefix(t, shifted, 50, 1);
  CHECK(aligned.matched == 50);
  CHECK(aligned.aligned_offset == 1);
  CHECK_FALSE(aligned.first_mismatch);
  CHECK(kind_of([&] { compare_prefix(t, shifted, 50, 0); }) == ErrorKind::InvalidArgument);

  CHECK(kind_of([&] { compare_prefix(egf_coefficients(family("A143405"), 10, CoeffMode::floating(30)), ref, 5); }) ==
        ErrorKind::NotExactMode);
  CHECK(kind_of([&] { compare_prefix(t, ref, 102); }) == ErrorKind::InvalidArgument);
}
