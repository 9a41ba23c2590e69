#include "blocklis/sequence.hpp"

#include <cctype>

namespace blocklis {

Sequence sequence_from_bytes(std::string_view bytes) {
  Sequence s;
  s.reserve(bytes.size());
  for (unsigned char b : bytes) s.push_back(static_cast<Symbol>(b));
  return s;
}

Symbol TokenDictionary::intern(std::string_view token) {
  auto it = ids_.find(std::string(token));
  if (it != ids_.end()) return it->second;
  Symbol id = static_cast<Symbol>(ids_.size());
  ids_.emplace(std::string(token), id);
  return id;
}

namespace {

bool is_ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}

}  // namespace

Sequence tokenize(std::string_view text, TokenDictionary& dict) {
  Sequence s;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ascii_space(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_ascii_space(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) s.push_back(dict.intern(text.substr(start, i - start)));
  }
  return s;
}

}  // namespace blocklis
