#ifndef SSET_ERROR_HPP
#define SSET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sset {

/**
 * Base class of every error raised by the engine.
 */
class Error : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/** Malformed presentation data: dangling names, wrong face counts, bad words. */
class PresentationError : public Error
{
    public:
        using Error::Error;
};

/** An index (face, degeneracy, horn slot) outside its valid range. */
class IndexError : public Error
{
    public:
        using Error::Error;
};

/**
 * A computation needs simplices above the top dimension of a truncated
 * presentation. This is "undecidable at this truncation", never a negative
 * answer.
 */
class TruncationError : public Error
{
    public:
        using Error::Error;
};

/** A horn that the search could not fill when a filler was required. */
class HornError : public Error
{
    public:
        using Error::Error;
};

/** Internal consistency check failed (e.g. a class map depends on the representative). */
class ConsistencyError : public Error
{
    public:
        using Error::Error;
};

/** Text-level parse failure with a 1-based line and column. */
class ParseError : public Error
{
    public:
        ParseError(const std::string& message, int line, int column)
            : Error(message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
              line_(line), column_(column)
        {
        }

        int line() const { return line_; }
        int column() const { return column_; }

    private:
        int line_;
        int column_;
};

}   // namespace sset

#endif
