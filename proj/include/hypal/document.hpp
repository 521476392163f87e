#pragma once

// JSON file formats: hypergroup documents, test-function files and group
// Cayley tables. Rationals are strings ("p/q" or integers) so nothing passes
// through binary floating point.
//
// Hypergroup document:
//   {
//     "name": "H2(1/2)",
//     "elements": ["e", "a"],                // first symbol is the identity
//     "involution": {"e": "e", "a": "a"},
//     "convolution": {"a,a": {"e": "1/2", "a": "1/2"}}
//   }
// Pairs involving the identity may be omitted; sparse distributions omit
// zero entries.

#include "hypal/corpus.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace hypal {

/// Malformed document; the message names the offending location.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

using Json = nlohmann::ordered_json;

ConvolutionTable parse_document(std::string_view text);
ConvolutionTable table_from_json(const Json& doc);
ConvolutionTable read_document(const std::filesystem::path& path);

Json to_json(const ConvolutionTable& t);
/// Canonical text: two-space indented JSON with a trailing newline.
std::string serialize_document(const ConvolutionTable& t);

/// {"values": {"e": "1", "a": "1/2"}}; omitted symbols are 0.
FunctionOnH parse_function(const ConvolutionTable& t, const Json& doc);
FunctionOnH read_function(const ConvolutionTable& t, const std::filesystem::path& path);

/// {"name": "S3", "elements": [...], "table": [[symbol of xy for y] for x]}
GroupTable parse_group(const Json& doc);
GroupTable read_group(const std::filesystem::path& path);
Json to_json(const GroupTable& g);

/// Sparse {symbol: "p/q"} for the nonzero entries of v.
Json sparse_json(const ConvolutionTable& t, const RVector& v);
/// Dense {symbol: "p/q"}.
Json dense_json(const ConvolutionTable& t, const RVector& v);
/// Inverse of sparse_json / dense_json.
RVector vector_from_json(const ConvolutionTable& t, const Json& obj, const std::string& where);

std::string decimal_string(double v);

/// Writes via a temporary file and rename.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace hypal
