#ifndef TFVS_TOURN_IO_HPP_
#define TFVS_TOURN_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tfvs/tournament.hpp"

namespace tfvs {

/// Malformed TOURN input. `line` and `column` are 1-based; 0 when not tied
/// to a position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// TOURN 1 text format: first line n, then n rows of n '0'/'1' characters
/// where row u column v is '1' iff u beats v.
Tournament read_tourn(std::istream& in);
Tournament read_tourn_file(const std::filesystem::path& path);
void write_tourn(std::ostream& out, const Tournament& t);
std::string to_tourn_string(const Tournament& t);

}  // namespace tfvs

#endif  // TFVS_TOURN_IO_HPP_
