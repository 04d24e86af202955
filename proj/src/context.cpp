#include "hypolog/context.hpp"

#include <algorithm>

namespace hypolog {

ContextId ContextId::extend(int64_t i) const {
  return ContextId(std::make_shared<const Node>(Node{i, size() + 1, node_}));
}

ContextId ContextId::from_sequence(const std::vector<int64_t>& seq) {
  ContextId c;
  for (int64_t i : seq) c = c.extend(i);
  return c;
}

ContextId ContextId::parent() const { return node_ ? ContextId(node_->next) : ContextId(); }

std::vector<int64_t> ContextId::reversed() const {
  std::vector<int64_t> out;
  for (const Node* n = node_.get(); n; n = n->next.get()) out.push_back(n->index);
  return out;
}

std::vector<int64_t> ContextId::sequence() const {
  std::vector<int64_t> out = reversed();
  std::reverse(out.begin(), out.end());
  return out;
}

std::string ContextId::to_string() const {
  std::string out = "[";
  bool first = true;
  for (int64_t i : reversed()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(i);
  }
  return out + "]";
}

bool operator==(const ContextId& a, const ContextId& b) {
  if (a.size() != b.size()) return false;
  const ContextId::Node* x = a.node_.get();
  const ContextId::Node* y = b.node_.get();
  while (x && x != y) {
    if (x->index != y->index) return false;
    x = x->next.get();
    y = y->next.get();
  }
  return true;
}

bool prefix_check(const ContextId& s1, const ContextId& s2) {
  if (s1.size() > s2.size()) return false;
  const ContextId::Node* y = s2.node_.get();
  for (size_t skip = s2.size() - s1.size(); skip > 0; --skip) y = y->next.get();
  const ContextId::Node* x = s1.node_.get();
  while (x && x != y) {
    if (x->index != y->index) return false;
    x = x->next.get();
    y = y->next.get();
  }
  return true;
}

void RegistrationStore::register_rule(int rule_id, Entry entry) {
  entries_[rule_id].push_back(std::move(entry));
  log_.push_back(rule_id);
  ++total_;
}

const std::vector<RegistrationStore::Entry>& RegistrationStore::lookup(int rule_id) const {
  static const std::vector<Entry> none;
  auto it = entries_.find(rule_id);
  return it == entries_.end() ? none : it->second;
}

void RegistrationStore::trim(size_t position) {
  while (log_.size() > position) {
    entries_[log_.back()].pop_back();
    log_.pop_back();
    --total_;
  }
}

void RegistrationStore::clear() {
  entries_.clear();
  log_.clear();
  total_ = 0;
  next_index_ = 0;
}

}  // namespace hypolog
