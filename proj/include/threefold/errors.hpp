#ifndef THREEFOLD_ERRORS_HPP
#define THREEFOLD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace threefold {

struct ring_mismatch_error : std::runtime_error {
  explicit ring_mismatch_error(const std::string& what)
      : std::runtime_error("ring mismatch: " + what) {}
};

// Thrown when a Groebner computation exceeds its step budget.
struct resource_limit_error : std::runtime_error {
  size_t pairs_processed;
  explicit resource_limit_error(size_t pairs)
      : std::runtime_error("resource limit exceeded after " + std::to_string(pairs) +
                           " S-pairs"),
        pairs_processed(pairs) {}
};

struct positive_dimensional_error : std::runtime_error {
  explicit positive_dimensional_error(const std::string& what)
      : std::runtime_error("positive-dimensional intersection: " + what) {}
};

struct not_acm_error : std::runtime_error {
  explicit not_acm_error(const std::string& what)
      : std::runtime_error("not ACM: " + what) {}
};

// A builder/verifier certificate failed (degree, genus, dimension, ...).
// Builders catch this and retry with a fresh derived seed.
struct certificate_error : std::runtime_error {
  std::string certificate;
  certificate_error(const std::string& name, const std::string& detail)
      : std::runtime_error("certificate '" + name + "' failed: " + detail),
        certificate(name) {}
};

struct unstable_character_error : std::runtime_error {
  explicit unstable_character_error(const std::string& what)
      : std::runtime_error("unstable character: " + what) {}
};

struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string& what)
      : std::runtime_error("parse error at line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

struct bad_arguments_error : std::runtime_error {
  explicit bad_arguments_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace threefold

#endif
