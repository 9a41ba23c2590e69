#ifndef BLOCKLIS_SEQUENCE_HPP
#define BLOCKLIS_SEQUENCE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace blocklis {

// Alphabet element. Bytes map to 0..255; token mode interns whitespace-separated
// tokens to dense ids in first-seen order, so ids stay small relative to input size.
using Symbol = std::uint32_t;

// 0-based position inside a sequence.
using Position = std::uint32_t;

using Sequence = std::vector<Symbol>;

// One symbol per input byte (no newline stripping; bytes are the alphabet).
Sequence sequence_from_bytes(std::string_view bytes);

// First-seen-order token interner. Shared across both inputs of a comparison so
// equal tokens get equal ids.
class TokenDictionary {
 public:
  Symbol intern(std::string_view token);
  std::size_t size() const { return ids_.size(); }

 private:
  std::unordered_map<std::string, Symbol> ids_;
};

// Splits on ASCII whitespace and interns each token.
Sequence tokenize(std::string_view text, TokenDictionary& dict);

}  // namespace blocklis

#endif  // BLOCKLIS_SEQUENCE_HPP
