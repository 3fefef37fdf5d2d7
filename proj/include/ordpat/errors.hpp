#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordpat {

// Base class for everything thrown by this library. Exceptions signal bad
// inputs or violated preconditions; failed *checks* are not exceptions, they
// come back as Report entries.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string join_cycle(const std::vector<std::string>& cycle) {
  std::string s;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) s += " < ";
    s += cycle[i];
  }
  return s;
}
}  // namespace detail

// The transitive closure of the requested relation would be reflexive.
// `cycle` lists the labels along one offending cycle, first == last.
struct CycleDetected : Error {
  std::vector<std::string> cycle;
  explicit CycleDetected(std::vector<std::string> c)
      : Error("cycle detected: " + detail::join_cycle(c)), cycle(std::move(c)) {}
};

struct UnknownElement : Error {
  std::string label;
  explicit UnknownElement(std::string l)
      : Error("unknown element: " + l), label(std::move(l)) {}
};

struct BoundExceeded : Error {
  std::size_t requested = 0;
  std::size_t bound = 0;
  BoundExceeded(const std::string& what, std::size_t req, std::size_t b)
      : Error(what + ": requested " + std::to_string(req) +
              " exceeds bound " + std::to_string(b)),
        requested(req),
        bound(b) {}
};

// A generator parameter small enough to break the documented axioms.
struct DegenerateParameter : Error {
  using Error::Error;
};

// Guard for sigma_pattern; cannot trigger when the pattern satisfies C2.
struct NotAStrictOrder : Error {
  using Error::Error;
};

// An embedding handed to an extraction routine failed verification.
struct InvalidEmbedding : Error {
  using Error::Error;
};

// Malformed JSON input; `where` points at the offending field.
struct ParseError : Error {
  std::string where;
  ParseError(std::string w, const std::string& what)
      : Error(w + ": " + what), where(std::move(w)) {}
};

}  // namespace ordpat
