#pragma once

#include <stdexcept>
#include <string>

namespace optbwtrl {

// Malformed user input: texts, patterns, flags.
class invalid_input : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A caller broke a query precondition (interval does not contain the position, ...).
class contract_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// A structural invariant of the index or of the long-LEM state failed. Always a bug.
class internal_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Index file could not be decoded.
class format_error : public std::runtime_error {
  public:
    enum class kind { truncated, bad_magic, version_mismatch, checksum, malformed };

    format_error(kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}

    kind which() const noexcept { return kind_; }

  private:
    kind kind_;
};

#if defined(OPTBWTRL_CHECKS)
inline constexpr bool checks_enabled = true;
#else
inline constexpr bool checks_enabled = false;
#endif

inline void require(bool cond, const char* what) {
    if constexpr (checks_enabled) {
        if (!cond) throw contract_error(what);
    }
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

} // namespace optbwtrl
