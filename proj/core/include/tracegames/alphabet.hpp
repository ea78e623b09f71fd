#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace tracegames {

using LetterId = std::uint32_t;
using ProcessId = std::uint32_t;

/// A dependency alphabet: an ordered set of letters, each with a nonempty
/// domain of processes. Two letters are independent exactly when their
/// domains are disjoint; the letter order (declaration order) is the order
/// used by lexicographic normal forms.
class DependencyAlphabet {
 public:
  ProcessId add_process(const std::string& name);
  LetterId add_letter(const std::string& name,
                      const std::vector<std::string>& domain);

  std::size_t letter_count() const { return letter_names_.size(); }
  std::size_t process_count() const { return process_names_.size(); }

  const std::string& letter_name(LetterId a) const { return letter_names_[a]; }
  const std::string& process_name(ProcessId p) const {
    return process_names_[p];
  }

  bool has_letter(const std::string& name) const {
    return letter_index_.count(name) != 0;
  }
  bool has_process(const std::string& name) const {
    return process_index_.count(name) != 0;
  }
  LetterId letter(const std::string& name) const;
  ProcessId process(const std::string& name) const;

  /// Domain of a letter, ascending by ProcessId.
  std::span<const ProcessId> domain(LetterId a) const { return domains_[a]; }

  bool in_domain(LetterId a, ProcessId p) const;

  /// Symmetric and reflexive; letters are dependent iff domains intersect.
  bool dependent(LetterId a, LetterId b) const {
    return dep_[a * letter_names_.size() + b];
  }
  bool independent(LetterId a, LetterId b) const { return !dependent(a, b); }

  bool operator==(const DependencyAlphabet& other) const;

 private:
  std::vector<std::string> letter_names_;
  std::vector<std::vector<ProcessId>> domains_;
  std::vector<std::string> process_names_;
  std::unordered_map<std::string, LetterId> letter_index_;
  std::unordered_map<std::string, ProcessId> process_index_;
  std::vector<bool> dep_;  // letter_count² dependence matrix
};

}  // namespace tracegames
