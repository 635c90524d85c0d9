/**
 * Reading and writing .ffc documents (JSON) and .ffctrace files.
 */
#ifndef FFC_IO_HPP
#define FFC_IO_HPP

#include <stdexcept>
#include <string>

#include "ffc/model.hpp"
#include "ffc/moves.hpp"

namespace ffc {

struct Trace;

class DecodeError : public std::runtime_error
{
    public:
        enum class Kind { Syntax, Schema, Semantic };

        DecodeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
        Kind kind() const { return kind_; }

    private:
        Kind kind_;
};

/**
 * Parse a document. Syntax errors carry line/column, schema errors carry
 * the JSON path of the offending value. The result is normalized but not
 * validated; see decodeValid.
 */
FlowCategory decode(const std::string& text);

/** decode followed by validate; violations raise a Semantic DecodeError. */
FlowCategory decodeValid(const std::string& text);

/** Canonical form: sorted keys, sorted ids, two-space indent, trailing newline. */
std::string encode(const FlowCategory& category);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& text);

/** Descriptor as a JSON object: {"kind", params..., "text"}. */
std::string descriptorToJson(const MoveDescriptor& move);
MoveDescriptor descriptorFromJson(const std::string& text);

std::string encodeTrace(const Trace& trace);
Trace decodeTrace(const std::string& text);

}   // namespace ffc

#endif
