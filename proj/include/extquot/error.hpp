#pragma once

#include <stdexcept>
#include <string>

namespace extquot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NonUnimodular : public Error { using Error::Error; };
class ClosureExceedsBound : public Error { using Error::Error; };
class NotAMember : public Error { using Error::Error; };
class RankMismatch : public Error { using Error::Error; };
class NotFixed : public Error { using Error::Error; };
class NotOnComponent : public Error { using Error::Error; };
class ZeroParameter : public Error { using Error::Error; };
class SizeMismatch : public Error { using Error::Error; };
class GridNotStable : public Error { using Error::Error; };
class ArithmeticOverflow : public Error { using Error::Error; };
class InvalidArgument : public Error { using Error::Error; };

namespace detail {

inline void require_rank(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got)
    throw RankMismatch(std::string(what) + ": rank " + std::to_string(got) +
                       " does not match " + std::to_string(expected));
}

} // namespace detail
} // namespace extquot
