#include "hypolog/answer.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hypolog/printer.hpp"

namespace hypolog {

namespace {

std::string render(const Answer& a, const char* sep, const char* eq, bool canonical) {
  std::map<int, int> order;
  VarNamer namer = [&](int id) {
    if (!canonical) return "_G" + std::to_string(id);
    auto [it, fresh] = order.emplace(id, static_cast<int>(order.size()));
    return "_G" + std::to_string(it->second);
  };
  std::string out;
  for (size_t i = 0; i < a.bindings.size(); ++i) {
    if (i) out += sep;
    out += a.bindings[i].first + eq + format_term(a.bindings[i].second, namer);
  }
  return out;
}

using Groups = std::map<std::string, std::vector<double>>;

Groups group(const std::vector<Answer>& answers) {
  Groups g;
  for (const auto& a : answers) g[a.canonical()].push_back(a.degree);
  for (auto& [k, v] : g) std::sort(v.begin(), v.end());
  return g;
}

}  // namespace

std::string Answer::canonical() const { return render(*this, ";", "=", true); }

std::string Answer::to_string() const {
  std::string b = render(*this, ", ", " = ", false);
  return (b.empty() ? std::string("true") : b) + " with degree " + format_number(degree, false);
}

Answer read_answer(const rt::Store& store, rt::Ref env, const Query& query, double degree) {
  Answer a;
  a.degree = degree;
  rt::Reader reader(store, query.num_vars);
  for (int i = 0; i < query.num_vars; ++i) reader.name(env + static_cast<rt::Ref>(i), i);
  for (int i = 0; i < query.num_vars; ++i) {
    const std::string& name = query.var_names[static_cast<size_t>(i)];
    if (name.empty() || name[0] == '_') continue;
    a.bindings.emplace_back(name, reader.read(env + static_cast<rt::Ref>(i)));
  }
  return a;
}

bool sub_multiset(const std::vector<Answer>& sub, const std::vector<Answer>& super, double tolerance) {
  Groups small = group(sub), big = group(super);
  for (const auto& [key, degrees] : small) {
    auto it = big.find(key);
    if (it == big.end()) return false;
    std::vector<bool> used(it->second.size(), false);
    for (double d : degrees) {
      bool matched = false;
      for (size_t j = 0; j < it->second.size(); ++j)
        if (!used[j] && std::abs(it->second[j] - d) <= tolerance) {
          used[j] = matched = true;
          break;
        }
      if (!matched) return false;
    }
  }
  return true;
}

bool same_answers(const std::vector<Answer>& a, const std::vector<Answer>& b, double tolerance) {
  return a.size() == b.size() && sub_multiset(a, b, tolerance);
}

std::string format_answers(const std::vector<Answer>& answers) {
  if (answers.empty()) return "no\n";
  std::string out;
  for (const auto& a : answers) out += a.to_string() + "\n";
  return out;
}

}  // namespace hypolog
