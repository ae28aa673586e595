#pragma once

#include <unordered_map>

#include "qfs/error.h"

namespace qfs {

template <typename T, typename IdOf>
std::vector<const T*> align_by_id(const Corpus& corpus, const std::vector<T>& items, IdOf id_of,
                                  const std::string& what) {
  std::unordered_map<std::string, const T*> by_id;
  for (const T& item : items) by_id.emplace(id_of(item), &item);
  std::vector<const T*> aligned;
  aligned.reserve(corpus.samples.size());
  std::string missing;
  std::size_t missing_count = 0;
  for (const CorpusSample& s : corpus.samples) {
    const auto it = by_id.find(s.sample_id);
    if (it == by_id.end()) {
      ++missing_count;
      if (!missing.empty()) missing += ", ";
      missing += s.sample_id;
      aligned.push_back(nullptr);
    } else {
      aligned.push_back(it->second);
    }
  }
  if (missing_count > 0) {
    throw data_error(what + " missing " + std::to_string(missing_count) + " sample id(s): " + missing);
  }
  return aligned;
}

}  // namespace qfs
