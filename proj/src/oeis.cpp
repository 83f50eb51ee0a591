#include "egfasym/oeis.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

namespace egfasym {

const mpz_class* BFile::find(std::int64_t index) const {
  if (entries.empty() || index < first_index() || index > last_index()) return nullptr;
  return &entries[static_cast<std::size_t>(index - first_index())].second;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

BFile parse_bfile(std::string_view text, std::string anum) {
  BFile out{std::move(anum), {}};
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto split = line.find_first_of(" \t");
    const auto idx = split == std::string_view::npos ? line : line.substr(0, split);
    const auto val = split == std::string_view::npos ? std::string_view{} : trim(line.substr(split));
    if (!is_integer(idx) || !is_integer(val) || idx.size() > 18) {
      throw Error(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": '" + std::string(line) + "'");
    }
    const std::int64_t index = std::stoll(std::string(idx));
    if (!out.entries.empty() && index != out.entries.back().first + 1) {
      throw Error(ErrorKind::NonContiguousIndex, "line " + std::to_string(line_no) + ": index " +
                                                     std::to_string(index) + " follows " +
                                                     std::to_string(out.entries.back().first));
    }
    out.entries.emplace_back(index, mpz_class(std::string(val), 10));
  }
  if (out.entries.empty()) throw Error(ErrorKind::Empty, "b-file has no entries");
  return out;
}

std::string serialize(const BFile& bfile) {
  std::string out;
  for (const auto& [i, v] : bfile.entries) out += std::to_string(i) + " " + v.get_str() + "\n";
  return out;
}

bool is_valid_anum(std::string_view anum) {
  return anum.size() == 7 && anum.front() == 'A' &&
         std::all_of(anum.begin() + 1, anum.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("EGF_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "egfasym";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "egfasym";
  return std::filesystem::temp_directory_path() / "egfasym";
}

std::string default_base_url() {
  if (const char* env = std::getenv("OEIS_BASE_URL"); env && *env) return env;
  return "https://oeis.org";
}

std::filesystem::path bfile_cache_path(const std::filesystem::path& cache_dir, std::string_view anum) {
  return cache_dir / "bfiles" / ("b" + std::string(anum.substr(1)) + ".txt");
}

std::string bfile_url(std::string_view base_url, std::string_view anum) {
  std::string base(base_url);
  while (!base.empty() && base.back() == '/') base.pop_back();
  return base + "/" + std::string(anum) + "/b" + std::string(anum.substr(1)) + ".txt";
}

void write_file_atomically(const std::filesystem::path& path, std::string_view body) {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.parent_path() / (path.filename().string() + ".tmp." + std::to_string(::getpid()) + "." +
                                         std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorKind::InvalidArgument, "cannot write cache file " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

namespace {

struct Endpoint {
  std::string scheme_host_port;
  std::string path;
};

Endpoint split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  const auto host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
  const auto slash = url.find('/', host_start);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

bool transient(int status) { return status == 0 || status == 429 || status >= 500; }

std::string http_get(const std::string& url, const FetchOptions& options) {
  const Endpoint ep = split_url(url);
  for (int attempt = 0;; ++attempt) {
    int status = 0;
    std::string detail;
    try {
      httplib::Client client(ep.scheme_host_port);
      const auto secs = std::chrono::duration_cast<std::chrono::seconds>(options.timeout);
      const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(options.timeout - secs);
      client.set_connection_timeout(secs.count(), usecs.count());
      client.set_read_timeout(secs.count(), usecs.count());
      client.set_follow_location(true);
      if (auto res = client.Get(ep.path)) {
        status = res->status;
        if (status == 200) return res->body;
        detail = "unexpected HTTP status";
      } else {
        detail = httplib::to_string(res.error());
      }
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (attempt == 0 && transient(status)) {
      std::this_thread::sleep_for(options.retry_backoff);
      continue;
    }
    throw NetworkError(url, status, detail);
  }
}

}  // namespace

BFile fetch_bfile(std::string_view anum, const FetchOptions& options) {
  if (!is_valid_anum(anum)) throw Error(ErrorKind::InvalidAnum, "'" + std::string(anum) + "' is not A + 6 digits");
  const auto path = bfile_cache_path(options.cache_dir, anum);

  std::string body;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  } else {
    body = http_get(bfile_url(options.base_url, anum), options);
    write_file_atomically(path, body);
  }
  try {
    return parse_bfile(body, std::string(anum));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

ComparisonReport compare_prefix(const CoeffTable& coeffs, const BFile& bfile, std::size_t count,
                                std::int64_t offset) {
  const auto& values = coeffs.exact();
  if (count > values.size()) {
    throw Error(ErrorKind::InvalidArgument, "count " + std::to_string(count) + " exceeds table size " +
                                                std::to_string(values.size()));
  }
  if (count > 0 && (!bfile.find(offset) || !bfile.find(static_cast<std::int64_t>(count) - 1 + offset))) {
    throw Error(ErrorKind::InvalidArgument, "b-file does not cover indices " + std::to_string(offset) + ".." +
                                                std::to_string(static_cast<std::int64_t>(count) - 1 + offset));
  }
  ComparisonReport report;
  report.aligned_offset = offset;
  for (std::size_t k = 0; k < count; ++k) {
    const std::int64_t index = static_cast<std::int64_t>(k) + offset;
    const mpz_class& expected = *bfile.find(index);
    const mpq_class& got = values[k];
    if (got.get_den() != 1 || got.get_num() != expected) {
      report.first_mismatch = Mismatch{index, expected.get_str(), got.get_str()};
      break;
    }
    ++report.matched;
  }
  return report;
}

}  // namespace egfasym
