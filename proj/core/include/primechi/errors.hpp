#pragma once

#include <stdexcept>

namespace primechi {

// A computed result contradicts an identity the library promises to uphold
// (partition identity violated, table diff mismatch, ...).  Distinct from
// std::domain_error (bad input) so the CLI can map them to different exit
// codes.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace primechi
