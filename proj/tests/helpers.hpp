#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lsx/types.hpp"
#include "lsx/util.hpp"

namespace lsx::test {

inline Dataset make_dataset(std::vector<Instance> rows,
                            std::vector<int> labels = {}) {
  Dataset d;
  d.rows = std::move(rows);
  d.labels = std::move(labels);
  for (std::size_t j = 0; j < d.dim(); ++j) {
    d.feature_names.push_back("f" + std::to_string(j));
  }
  refresh_meta(d);
  return d;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

/// Minimal well-formedness check for the generated XML: every open tag is
/// closed in order and attribute quotes balance.
inline bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') {
      ++i;
      continue;
    }
    if (text.compare(i, 4, "<!--") == 0) {
      const auto end = text.find("-->", i);
      if (end == std::string::npos) return false;
      i = end + 3;
      continue;
    }
    if (text.compare(i, 2, "<?") == 0) {
      const auto end = text.find("?>", i);
      if (end == std::string::npos) return false;
      i = end + 2;
      continue;
    }
    const auto close = text.find('>', i);
    if (close == std::string::npos) return false;
    std::string tag = text.substr(i + 1, close - i - 1);
    // attribute quote balance
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
    if (!tag.empty() && tag.front() == '/') {
      const std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (!tag.empty() && tag.back() != '/') {
      const auto space = tag.find_first_of(" \t\n");
      stack.push_back(space == std::string::npos ? tag : tag.substr(0, space));
    }
    i = close + 1;
  }
  return stack.empty();
}

/// All values of `attr` within elements of the given name, in document order.
inline std::vector<std::string> extract_attr(const std::string& text,
                                             const std::string& element,
                                             const std::string& attr) {
  std::vector<std::string> out;
  const std::string open = "<" + element;
  std::size_t pos = 0;
  while ((pos = text.find(open, pos)) != std::string::npos) {
    const auto end = text.find('>', pos);
    if (end == std::string::npos) break;
    const std::string tag = text.substr(pos, end - pos);
    const auto a = tag.find(attr + "=\"");
    if (a != std::string::npos) {
      const auto start = a + attr.size() + 2;
      const auto quote = tag.find('"', start);
      if (quote != std::string::npos) out.push_back(tag.substr(start, quote - start));
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace lsx::test
