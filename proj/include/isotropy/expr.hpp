#pragma once

#include "isotropy/form.hpp"
#include "isotropy/place.hpp"
#include "isotropy/ratfun.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isotropy {

/// Malformed or invalid text input; offset is the byte position of the
/// offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message);
    std::size_t offset() const { return offset_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t offset_;
    std::string reason_;
};

// Grammar (whitespace insignificant):
//   form   := expr (',' expr)*
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' uint)?
//   atom   := '(' expr ')' | 'X' | 't' | uint
//   place  := 'mono' '(' int ',' int (',' 'shift' '=' expr)? ')'
//           | 'p' '(' expr ')'
//           | 'inf'

RatFun parse_ratfun(std::string_view text);

/// Same grammar with the single variable `var` (residue elements in z).
UniRatFun parse_unirat(std::string_view text, char var = 'z');

DiagForm parse_form(std::string_view text);

/// Parses and validates; validation failures become ParseErrors located at
/// the descriptor.
Place parse_place(std::string_view text);
RawPlace parse_raw_place(std::string_view text);

}  // namespace isotropy
