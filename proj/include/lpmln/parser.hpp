#pragma once

#include <string_view>

#include "lpmln/errors.hpp"
#include "lpmln/program.hpp"

namespace lpmln {

// Parses program text:
//
//   program   := { statement }
//   statement := weight ":" rule "."
//   weight    := "alpha" | real
//   rule      := head | head ":-" body | ":-" body
//   head      := literal { "v" literal }        ("|" is a synonym of "v")
//   body      := bodylit { "," bodylit }
//   bodylit   := literal | "not" literal
//   literal   := IDENT | "-" IDENT
//
// "%" starts a comment running to end of line. "not" is reserved and the
// "__" identifier prefix is reserved for internally generated atoms.
// An empty body after ":-" is accepted so that printed programs always
// parse back.
//
// Throws ParseError with a 1-based line:column position.
Program parse_program(std::string_view text);

// Single-literal parser for CLI arguments ("a" or "-a").
Literal parse_literal(std::string_view text);

}  // namespace lpmln
