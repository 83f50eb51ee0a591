#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "egfasym/error.hpp"
#include "egfasym/series.hpp"

namespace egfasym {

/// A parsed OEIS b-file: contiguous (index, value) records.
struct BFile {
  std::string anum;
  std::vector<std::pair<std::int64_t, mpz_class>> entries;

  std::int64_t first_index() const { return entries.front().first; }
  std::int64_t last_index() const { return entries.back().first; }
  std::size_t size() const { return entries.size(); }
  /// Value at an OEIS index, if present.
  const mpz_class* find(std::int64_t index) const;
};

/// Skips blank and '#' lines; every other line must be "<index> <value>".
BFile parse_bfile(std::string_view text, std::string anum = {});
std::string serialize(const BFile& bfile);

bool is_valid_anum(std::string_view anum);

/// Thrown for transport failures and non-200 responses; status is 0 when no
/// response was received.
class NetworkError : public Error {
 public:
  NetworkError(std::string url, int status, const std::string& detail)
      : Error(ErrorKind::NetworkError, url + " (status " + std::to_string(status) + "): " + detail),
        url_(std::move(url)),
        status_(status) {}

  const std::string& url() const { return url_; }
  int status() const { return status_; }

 private:
  std::string url_;
  int status_;
};

/// $EGF_CACHE_DIR, else $XDG_CACHE_HOME/egfasym, else ~/.cache/egfasym.
std::filesystem::path default_cache_dir();
/// $OEIS_BASE_URL, else https://oeis.org.
std::string default_base_url();

struct FetchOptions {
  std::filesystem::path cache_dir = default_cache_dir();
  std::string base_url = default_base_url();
  std::chrono::milliseconds timeout{30000};
  std::chrono::milliseconds retry_backoff{1000};
};

/// <cache_dir>/bfiles/b<digits>.txt
std::filesystem::path bfile_cache_path(const std::filesystem::path& cache_dir, std::string_view anum);
/// <base_url>/<anum>/b<digits>.txt
std::string bfile_url(std::string_view base_url, std::string_view anum);

/// Cache first; otherwise one GET (plus a single retry on transient
/// failures), stored atomically before parsing.
BFile fetch_bfile(std::string_view anum, const FetchOptions& options = {});

/// Writes `body` to `path` through a temporary file and rename.
void write_file_atomically(const std::filesystem::path& path, std::string_view body);

struct Mismatch {
  std::int64_t index;  // OEIS index
  std::string expected;
  std::string got;
};

struct ComparisonReport {
  std::size_t matched = 0;
  std::optional<Mismatch> first_mismatch;
  std::int64_t aligned_offset = 0;
};

/// Compares a(k) with the b-file entry at k + offset for k < count.
ComparisonReport compare_prefix(const CoeffTable& coeffs, const BFile& bfile, std::size_t count,
                                std::int64_t offset = 0);

}  // namespace egfasym
