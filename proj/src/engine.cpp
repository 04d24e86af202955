#include "hypolog/engine.hpp"

namespace hypolog {

std::vector<Answer> collect(AnswerStream& stream, std::optional<size_t> limit) {
  std::vector<Answer> out;
  while (!limit || out.size() < *limit) {
    auto a = stream.next();
    if (!a) break;
    out.push_back(std::move(*a));
  }
  return out;
}

}  // namespace hypolog
