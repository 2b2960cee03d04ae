#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace brauer::cli {

enum class TokenKind { Integer, Word, Symbol, End };

/// Words are letters, digits and underscores starting with a letter; a '-'
/// between two letters stays inside the word (`profile-brauer`). Symbols
/// are single characters plus `->`, `<-`, `<=` and `>=`.
struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Throws ParseError on characters outside the grammar. The result always
/// ends with an End token.
std::vector<Token> tokenize(std::string_view input, std::size_t line = 1);

}  // namespace brauer::cli
