#include "brauer/cli/lexer.hpp"

#include <cctype>

#include "brauer/errors.hpp"

namespace brauer::cli {

namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_word_char(char c) { return is_letter(c) || is_digit(c) || c == '_'; }

constexpr std::string_view kSingle = "()[]{},;:+^/=*<>-";

}  // namespace

std::vector<Token> tokenize(std::string_view input, std::size_t line) {
  std::vector<Token> out;
  std::size_t col = 1;
  std::size_t i = 0;
  while (i < input.size()) {
    const char c = input[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t j = i;
    if (is_letter(c)) {
      t.kind = TokenKind::Word;
      while (j < input.size() &&
             (is_word_char(input[j]) ||
              (input[j] == '-' && j + 1 < input.size() && is_letter(input[j + 1]) && is_letter(input[j - 1])))) {
        ++j;
      }
    } else if (is_digit(c)) {
      t.kind = TokenKind::Integer;
      while (j < input.size() && is_digit(input[j])) ++j;
    } else if (kSingle.find(c) != std::string_view::npos) {
      t.kind = TokenKind::Symbol;
      j = i + 1;
      if (j < input.size()) {
        const char d = input[j];
        if ((c == '-' && d == '>') || (c == '<' && (d == '-' || d == '=')) || (c == '>' && d == '=')) ++j;
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    t.text = std::string(input.substr(i, j - i));
    col += j - i;
    i = j;
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = TokenKind::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

}  // namespace brauer::cli
