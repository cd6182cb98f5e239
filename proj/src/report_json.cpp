#include "bskdv/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "bskdv/errors.hpp"

namespace bskdv {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

void KvWriter::add(const std::string& key, double v) {
  if (!std::isfinite(v)) {
    add_null(key);
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  items_.emplace_back(key, buf);
}

void KvWriter::add(const std::string& key, const std::string& v) { items_.emplace_back(key, quote(v)); }
void KvWriter::add(const std::string& key, const char* v) { add(key, std::string(v)); }
void KvWriter::add(const std::string& key, bool v) { items_.emplace_back(key, v ? "true" : "false"); }

void KvWriter::add(const std::string& key, long long v) {
  items_.emplace_back(key, std::to_string(v));
}

void KvWriter::add_null(const std::string& key) { items_.emplace_back(key, "null"); }

std::string KvWriter::str() const {
  std::string out = "{\n";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    out += "  " + quote(items_[i].first) + ": " + items_[i].second;
    if (i + 1 < items_.size()) out += ",";
    out += "\n";
  }
  out += "}\n";
  return out;
}

void KvWriter::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw numerical_error("cannot open for writing: " + path);
  out << str();
  if (!out) throw numerical_error("write failed: " + path);
}

}  // namespace bskdv
