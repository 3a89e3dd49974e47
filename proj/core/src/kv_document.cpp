#include "fdroof/kv_document.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "fdroof/error.hpp"

namespace fdroof {

void KvDocument::set(std::string key, Entry entry) {
  auto [it, inserted] = entries_.emplace(std::move(key), entry);
  if (!inserted) {
    throw ParseError(source_, entry.line, "duplicate key '" + it->first + "'");
  }
}

const KvDocument::Entry* KvDocument::find(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

bool KvDocument::has(std::string_view key) const { return find(key) != nullptr; }

bool KvDocument::has_prefix(std::string_view prefix) const {
  std::string dotted = std::string(prefix) + ".";
  auto it = entries_.lower_bound(dotted);
  return it != entries_.end() && it->first.starts_with(dotted);
}

void KvDocument::fail(std::string_view key, const std::string& what) const {
  const Entry* e = find(key);
  throw ParseError(source_, e ? e->line : line_, std::string(key) + ": " + what);
}

std::optional<std::string> KvDocument::get_string(std::string_view key) const {
  if (const Entry* e = find(key)) return e->value;
  return std::nullopt;
}

std::optional<double> KvDocument::get_double(std::string_view key) const {
  const Entry* e = find(key);
  if (!e) return std::nullopt;
  const std::string& v = e->value;
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    fail(key, "expected a number, got '" + v + "'");
  }
  return out;
}

std::optional<std::int64_t> KvDocument::get_int(std::string_view key) const {
  const Entry* e = find(key);
  if (!e) return std::nullopt;
  const std::string& v = e->value;
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    fail(key, "expected an integer, got '" + v + "'");
  }
  return out;
}

std::optional<bool> KvDocument::get_bool(std::string_view key) const {
  const Entry* e = find(key);
  if (!e) return std::nullopt;
  if (e->value == "true" || e->value == "yes" || e->value == "1") return true;
  if (e->value == "false" || e->value == "no" || e->value == "0") return false;
  fail(key, "expected a boolean, got '" + e->value + "'");
}

std::vector<std::pair<std::string, KvDocument::Entry>> KvDocument::children(
    std::string_view prefix) const {
  std::string dotted = std::string(prefix) + ".";
  std::vector<std::pair<std::string, Entry>> out;
  for (auto it = entries_.lower_bound(dotted);
       it != entries_.end() && it->first.starts_with(dotted); ++it) {
    out.emplace_back(it->first.substr(dotted.size()), it->second);
  }
  return out;
}

void KvDocument::require_known_keys(std::span<const std::string_view> keys,
                                    std::span<const std::string_view> prefixes) const {
  for (const auto& [key, entry] : entries_) {
    bool known = std::find(keys.begin(), keys.end(), key) != keys.end();
    for (auto p : prefixes) known = known || key.starts_with(p);
    if (!known) throw ParseError(source_, entry.line, "unknown key '" + key + "'");
  }
}

namespace {

void flatten(const YAML::Node& node, const std::string& prefix, KvDocument& doc) {
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    const std::string full = prefix.empty() ? key : prefix + "." + key;
    const YAML::Node& value = kv.second;
    const int line = value.Mark().line + 1;
    if (value.IsMap()) {
      flatten(value, full, doc);
    } else if (value.IsScalar()) {
      doc.set(full, {value.Scalar(), line});
    } else if (value.IsNull()) {
      doc.set(full, {"", line});
    } else {
      throw ParseError(doc.source(), line, "key '" + full + "': sequences are not supported");
    }
  }
}

}  // namespace

std::vector<KvDocument> parse_kv_documents(std::string_view text, const std::string& source) {
  std::vector<YAML::Node> nodes;
  try {
    nodes = YAML::LoadAll(std::string(text));
  } catch (const YAML::Exception& e) {
    std::optional<int> line;
    if (!e.mark.is_null()) line = e.mark.line + 1;
    throw ParseError(source, line, e.msg);
  }
  std::vector<KvDocument> docs;
  for (const auto& node : nodes) {
    if (node.IsNull()) continue;
    const int line = node.Mark().line + 1;
    if (!node.IsMap()) throw ParseError(source, line, "document is not a key-value mapping");
    KvDocument doc(source, line);
    flatten(node, "", doc);
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<KvDocument> load_kv_file(const std::filesystem::path& path) {
  return parse_kv_documents(read_text_file(path), path.string());
}

}  // namespace fdroof
