#ifndef PARADIGM_SOURCE_HPP
#define PARADIGM_SOURCE_HPP

#include <stdexcept>
#include <string>

namespace paradigm {

/// One Python source file to analyze. `content` is text after lossy UTF-8
/// decoding; `revision` is an opaque version id (commit hash) when the file
/// came out of a repository.
struct SourceFile {
    std::string path;
    std::string content;
    std::string revision;
};

/// Raised by the tokenizer/parser on malformed input. Callers record the
/// file as unparseable; analysis of other files continues.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(int line, int col, const std::string& message)
        : std::runtime_error(format(line, col, message)), line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    static std::string format(int line, int col, const std::string& message) {
        return "line " + std::to_string(line) + ":" + std::to_string(col) + ": " + message;
    }
    int line_;
    int col_;
};

} // namespace paradigm

#endif // PARADIGM_SOURCE_HPP
