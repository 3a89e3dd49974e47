#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fdroof {

// One document of a registry/catalog/scenario file, flattened to dotted keys.
// Documents are YAML mappings separated by `---`; nested mappings such as
//
//   arch:
//     cores: 12
//
// are addressed as "arch.cores". Line numbers are 1-based.
class KvDocument {
 public:
  struct Entry {
    std::string value;
    int line = 0;
  };
  using EntryMap = std::map<std::string, Entry, std::less<>>;

  KvDocument(std::string source, int line) : source_(std::move(source)), line_(line) {}

  const std::string& source() const noexcept { return source_; }
  int line() const noexcept { return line_; }
  const EntryMap& entries() const noexcept { return entries_; }

  void set(std::string key, Entry entry);
  bool has(std::string_view key) const;
  bool has_prefix(std::string_view prefix) const;

  std::optional<std::string> get_string(std::string_view key) const;
  std::optional<double> get_double(std::string_view key) const;
  std::optional<std::int64_t> get_int(std::string_view key) const;
  std::optional<bool> get_bool(std::string_view key) const;

  // Keys under `prefix.` with the prefix stripped, in key order.
  std::vector<std::pair<std::string, Entry>> children(std::string_view prefix) const;

  // Throws ParseError naming the first key that is neither listed in `keys`
  // nor starts with one of `prefixes` (given with a trailing dot).
  void require_known_keys(std::span<const std::string_view> keys,
                          std::span<const std::string_view> prefixes = {}) const;

  [[noreturn]] void fail(std::string_view key, const std::string& what) const;

 private:
  const Entry* find(std::string_view key) const;

  std::string source_;
  int line_;
  EntryMap entries_;
};

// Parses every document in `text`. Empty documents are skipped.
std::vector<KvDocument> parse_kv_documents(std::string_view text, const std::string& source);

std::vector<KvDocument> load_kv_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace fdroof
