#pragma once
#include <string>
#include <utility>
#include <vector>

namespace bskdv {

// flat, insertion-ordered JSON object writer for run summaries; doubles are
// %.17g so identical runs serialize byte-identically
class KvWriter {
 public:
  void add(const std::string& key, double v);
  void add(const std::string& key, const std::string& v);
  void add(const std::string& key, const char* v);
  void add(const std::string& key, bool v);
  void add(const std::string& key, long long v);
  void add(const std::string& key, int v) { add(key, static_cast<long long>(v)); }
  void add_null(const std::string& key);

  std::string str() const;
  void write(const std::string& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

}  // namespace bskdv
