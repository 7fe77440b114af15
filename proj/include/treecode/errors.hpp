#pragma once

#include <stdexcept>
#include <string>

namespace treecode {

// Failure categories; the CLI maps these onto its documented exit codes.
enum class ErrorKind {
    dimension,           // operands with mismatched n
    domain,              // value outside the mathematical domain (inv(0), log(0), ...)
    parameter,           // unusable argument (composite p, n below a construction's floor, ...)
    structure,           // edge list that is not the promised tree/forest/permutation
    resource,            // request above the configured enumeration cap
    data_integrity,      // embedded or loaded static table fails its validation
    ambiguity,           // decoder found more than one candidate in strict mode
    no_candidate,        // received word is not a fragment of any codeword
    undefined,           // quantity undefined (min distance of a 1-codeword set)
    format,              // unparseable document
    inconsistency,       // cross-checked quantities disagree (bound sandwich violated)
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace treecode
