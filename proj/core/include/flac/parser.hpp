#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flac/delegations.hpp"
#include "flac/syntax.hpp"

namespace flac {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, Span s)
      : std::runtime_error(what + " at " + std::to_string(s.line) + ":" +
                           std::to_string(s.col)),
        span(s) {}
  Span span;
};

// A .flac file: optional context/pc/gamma headers, then one term.
struct ProgramFile {
  DelegationContext context;
  std::optional<Principal> pc;
  std::vector<std::pair<std::string, Type>> gamma;
  Term term;
};

Principal parse_principal(const std::string& text);
Type parse_type(const std::string& text);
// Source mode rejects sealed/where/protection-context/bracket/hole.
Term parse_term(const std::string& text, bool extended = false);
Delegation parse_delegation(const std::string& text);
// "[p |> q, ...]" or a bare comma-separated list.
DelegationContext parse_delegation_context(const std::string& text);
std::vector<std::pair<std::string, Type>> parse_gamma(const std::string& text);

ProgramFile parse_program(const std::string& text, bool extended = false);
ProgramFile parse_program_file(const std::string& path, bool extended = false);

std::string pretty(const Term& e);
std::string pretty(const Type& t);
std::string pretty(const Principal& p);

}  // namespace flac
