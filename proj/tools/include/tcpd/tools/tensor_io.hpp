#pragma once

#include "tcpd/errors.hpp"
#include "tcpd/tensor.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <variant>

namespace tcpd::io {

/// Malformed tensor or CPD document. The message starts with the location
/// (file, then a JSON path such as entries[5][1]).
class FormatError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A field tensor (H = 1) or a border-ring tensor (H >= 2).
using AnyTensor = std::variant<Tensor<PrimeField>, Tensor<BorderRing>>;
using AnyCpd = std::variant<Cpd<PrimeField>, Cpd<BorderRing>>;

AnyTensor tensor_from_json(const nlohmann::ordered_json& doc, const std::string& where = "<input>");
AnyCpd cpd_from_json(const nlohmann::ordered_json& doc, const std::string& where = "<input>");

nlohmann::ordered_json to_json(const Tensor<PrimeField>& t);
nlohmann::ordered_json to_json(const Tensor<BorderRing>& t);
nlohmann::ordered_json to_json(const Cpd<PrimeField>& cpd);
nlohmann::ordered_json to_json(const Cpd<BorderRing>& cpd);
nlohmann::ordered_json to_json(const AnyTensor& t);
nlohmann::ordered_json to_json(const AnyCpd& cpd);

/// Parses text; syntax errors carry the line and column.
nlohmann::ordered_json parse_document(const std::string& text, const std::string& where = "<input>");

AnyTensor read_tensor_file(const std::filesystem::path& path);
AnyCpd read_cpd_file(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const nlohmann::ordered_json& doc);

/// Indented text with short arrays (vectors, matrix rows) kept on one line.
std::string format_document(const nlohmann::ordered_json& doc);

} // namespace tcpd::io
