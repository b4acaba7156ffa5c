#pragma once

// Registry of the 48 affine classes: parses the class table, verifies that
// all class signatures are pairwise distinct, and classifies arbitrary
// 5-variable functions by signature lookup.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bfca/affine.hpp"
#include "bfca/detail/class_data.hpp"
#include "bfca/error.hpp"
#include "bfca/truth_table.hpp"

namespace bfca {

struct ClassInfo {
  std::string rep_hex;
  std::string anf_text;
  std::uint64_t expected_count = 0;
  int rep_degree = 0;
};

class ClassRegistry {
public:
  static constexpr int kNumClasses = 48;

  static const ClassRegistry& builtin() {
    static const ClassRegistry reg = from_csv_text(detail::kClassTableCsv);
    return reg;
  }

  static ClassRegistry from_csv_text(std::string_view csv) {
    std::vector<ClassInfo> rows;
    std::istringstream in{std::string(csv)};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (header) {
        if (line != "rep_hex,anf,expected_count")
          throw ParseError("class table: unexpected header '" + line + "'");
        header = false;
        continue;
      }
      const auto c1 = line.find(',');
      const auto c2 = line.rfind(',');
      if (c1 == std::string::npos || c2 == c1)
        throw ParseError("class table: malformed row '" + line + "'");
      ClassInfo info;
      info.rep_hex = line.substr(0, c1);
      info.anf_text = line.substr(c1 + 1, c2 - c1 - 1);
      try {
        info.expected_count = std::stoull(line.substr(c2 + 1));
      } catch (const std::exception&) {
        throw ParseError("class table: bad count in row '" + line + "'");
      }
      rows.push_back(std::move(info));
    }
    return ClassRegistry(std::move(rows));
  }

  static ClassRegistry from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open class table '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_csv_text(buf.str());
  }

  int size() const { return static_cast<int>(entries_.size()); }
  const ClassInfo& info(int index) const { return entries_.at(index); }
  const std::vector<ClassInfo>& entries() const { return entries_; }
  const ClassSignature& signature_of(int index) const {
    return signatures_.at(index);
  }

  int index_of_hex(std::string_view rep_hex) const {
    for (int i = 0; i < size(); ++i)
      if (entries_[i].rep_hex == rep_hex) return i;
    return -1;
  }

  int classify_index(const ClassSignature& sig) const {
    const auto it = std::lower_bound(
        lookup_.begin(), lookup_.end(), sig,
        [](const auto& entry, const ClassSignature& s) { return entry.first < s; });
    if (it == lookup_.end() || it->first != sig)
      throw SignatureError("signature matches no affine class");
    return it->second;
  }

  int classify_index(const TruthTable& t) const {
    return classify_index(signature(t));
  }

  // Representative of the class containing t.
  const std::string& classify(const TruthTable& t) const {
    return entries_[classify_index(t)].rep_hex;
  }

private:
  explicit ClassRegistry(std::vector<ClassInfo> rows)
      : entries_(std::move(rows)) {
    if (entries_.size() != kNumClasses)
      throw ParseError("class table must have exactly 48 rows, got " +
                       std::to_string(entries_.size()));
    std::uint64_t total = 0;
    for (auto& info : entries_) {
      const TruthTable rep = TruthTable::from_hex(info.rep_hex, 5);
      const ClassSignature sig = signature(rep);
      info.rep_degree = sig.degree;
      signatures_.push_back(sig);
      total += info.expected_count;
    }
    if (total != (1ull << 32))
      throw ParseError("class counts must sum to 2^32, got " +
                       std::to_string(total));
    for (int i = 0; i < size(); ++i)
      lookup_.emplace_back(signatures_[i], i);
    std::sort(lookup_.begin(), lookup_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int i = 1; i < size(); ++i)
      if (lookup_[i].first == lookup_[i - 1].first)
        throw SignatureError("signature collision between classes " +
                             entries_[lookup_[i - 1].second].rep_hex + " and " +
                             entries_[lookup_[i].second].rep_hex);
  }

  std::vector<ClassInfo> entries_;
  std::vector<ClassSignature> signatures_;
  std::vector<std::pair<ClassSignature, int>> lookup_;
};

} // namespace bfca
