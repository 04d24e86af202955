#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypolog/term.hpp"

namespace hypolog {

/// Context identifier: the sequence of fresh indexes of the assumptions that
/// built a context. Stored most recent first; tails are shared.
class ContextId {
 public:
  ContextId() = default;  // the initial program

  /// Appends index `i` at the end of the sequence.
  ContextId extend(int64_t i) const;
  static ContextId from_sequence(const std::vector<int64_t>& seq);

  size_t size() const { return node_ ? node_->size : 0; }
  bool empty() const { return !node_; }
  /// Most recent index; undefined on the empty identifier.
  int64_t last() const { return node_->index; }
  ContextId parent() const;

  /// Oldest first.
  std::vector<int64_t> sequence() const;
  /// Most recent first, as stored.
  std::vector<int64_t> reversed() const;
  std::string to_string() const;

  friend bool operator==(const ContextId& a, const ContextId& b);

 private:
  struct Node {
    int64_t index;
    size_t size;
    std::shared_ptr<const Node> next;
  };
  explicit ContextId(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend bool prefix_check(const ContextId&, const ContextId&);

  std::shared_ptr<const Node> node_;
};

/// True iff `s1` is a prefix of `s2`, i.e. every rule visible in context
/// `s1` is visible in `s2`.
bool prefix_check(const ContextId& s1, const ContextId& s2);

/// Per-query record of registered hypothesis instances.
class RegistrationStore {
 public:
  struct Entry {
    std::vector<Term> shared;  // variables numbered from 0
    int num_vars = 0;
    ContextId context;
  };

  int64_t fresh_index() { return next_index_++; }
  int64_t issued() const { return next_index_; }

  void register_rule(int rule_id, Entry entry);
  /// All entries of `rule_id` in registration order.
  const std::vector<Entry>& lookup(int rule_id) const;
  size_t count(int rule_id) const { return lookup(rule_id).size(); }
  size_t size() const { return total_; }

  /// Undo log position; trim() discards entries registered after it.
  size_t log_position() const { return log_.size(); }
  void trim(size_t position);
  void clear();

 private:
  std::unordered_map<int, std::vector<Entry>> entries_;
  std::vector<int> log_;
  size_t total_ = 0;
  int64_t next_index_ = 0;
};

}  // namespace hypolog
