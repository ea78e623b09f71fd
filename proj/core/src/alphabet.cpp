#include "tracegames/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace tracegames {

ProcessId DependencyAlphabet::add_process(const std::string& name) {
  auto it = process_index_.find(name);
  if (it != process_index_.end()) return it->second;
  ProcessId id = static_cast<ProcessId>(process_names_.size());
  process_names_.push_back(name);
  process_index_.emplace(name, id);
  return id;
}

LetterId DependencyAlphabet::add_letter(const std::string& name,
                                        const std::vector<std::string>& domain) {
  if (domain.empty())
    throw std::invalid_argument("letter '" + name + "' has an empty domain");
  if (letter_index_.count(name) != 0)
    throw std::invalid_argument("duplicate letter '" + name + "'");

  std::vector<ProcessId> dom;
  dom.reserve(domain.size());
  for (const auto& p : domain) dom.push_back(add_process(p));
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());

  LetterId id = static_cast<LetterId>(letter_names_.size());
  letter_names_.push_back(name);
  letter_index_.emplace(name, id);
  domains_.push_back(std::move(dom));

  // Rebuild the dependence matrix with the new letter included.
  std::size_t n = letter_names_.size();
  std::vector<bool> dep(n * n, false);
  auto intersects = [&](LetterId a, LetterId b) {
    const auto& da = domains_[a];
    const auto& db = domains_[b];
    std::size_t i = 0, j = 0;
    while (i < da.size() && j < db.size()) {
      if (da[i] == db[j]) return true;
      if (da[i] < db[j])
        ++i;
      else
        ++j;
    }
    return false;
  };
  for (LetterId a = 0; a < n; ++a)
    for (LetterId b = a; b < n; ++b)
      dep[a * n + b] = dep[b * n + a] = intersects(a, b);
  dep_ = std::move(dep);
  return id;
}

LetterId DependencyAlphabet::letter(const std::string& name) const {
  auto it = letter_index_.find(name);
  if (it == letter_index_.end())
    throw std::invalid_argument("unknown letter '" + name + "'");
  return it->second;
}

ProcessId DependencyAlphabet::process(const std::string& name) const {
  auto it = process_index_.find(name);
  if (it == process_index_.end())
    throw std::invalid_argument("unknown process '" + name + "'");
  return it->second;
}

bool DependencyAlphabet::in_domain(LetterId a, ProcessId p) const {
  const auto& dom = domains_[a];
  return std::binary_search(dom.begin(), dom.end(), p);
}

bool DependencyAlphabet::operator==(const DependencyAlphabet& other) const {
  return letter_names_ == other.letter_names_ &&
         process_names_ == other.process_names_ && domains_ == other.domains_;
}

}  // namespace tracegames
