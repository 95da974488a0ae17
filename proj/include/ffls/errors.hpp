#pragma once

#include <stdexcept>
#include <string>

namespace ffls {

// Error categories map onto CLI exit codes: usage -> 1, domain -> 2,
// precision -> 3.  Every throw site tags a short machine-readable kind
// ("NonPrime", "OutOfDomain", ...) followed by a human-readable detail.

class error : public std::runtime_error {
public:
  error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

class usage_error : public error {
public:
  using error::error;
};

// Invalid mathematical input: reducible modulus, non-prime Q, argument
// outside a convergence domain, malformed module spec, and so on.
class domain_error : public error {
public:
  using error::error;
};

// The requested computation is well posed but the working precision could
// not support it (rounding ambiguity, exhausted digits, ...).
class precision_error : public error {
public:
  using error::error;
};

[[noreturn]] inline void fail_usage(const std::string& kind, const std::string& what) {
  throw usage_error(kind, what);
}
[[noreturn]] inline void fail_domain(const std::string& kind, const std::string& what) {
  throw domain_error(kind, what);
}
[[noreturn]] inline void fail_precision(const std::string& kind, const std::string& what) {
  throw precision_error(kind, what);
}

// Internal invariant check; always on, independent of NDEBUG.
#define FFLS_CHECK(cond, msg)                                              \
  do {                                                                     \
    if (!(cond)) throw ::ffls::error("Internal", std::string(msg));        \
  } while (0)

}  // namespace ffls
