#include "tcpd/tools/tensor_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tcpd::io {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& path, const std::string& what) {
    throw FormatError(where + ": " + (path.empty() ? std::string() : path + ": ") + what);
}

std::int64_t get_int(const json& v, const std::string& where, const std::string& path) {
    if (!v.is_number_integer()) fail(where, path, "expected an integer, got " + std::string(v.type_name()));
    if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(INT64_MAX)) fail(where, path, "integer out of range");
        return static_cast<std::int64_t>(u);
    }
    return v.get<std::int64_t>();
}

const json& member(const json& doc, const char* key, const std::string& where) {
    const auto it = doc.find(key);
    if (it == doc.end()) fail(where, "", std::string("missing key \"") + key + "\"");
    return *it;
}

struct Header {
    PrimeField field;
    int exponent = 1;
    Shape shape;
};

Header read_header(const json& doc, const std::string& where) {
    if (!doc.is_object()) fail(where, "", "expected a JSON object at top level");
    const auto p = get_int(member(doc, "p", where), where, "p");
    if (p < 2 || p > static_cast<std::int64_t>(PrimeField::kMaxModulus))
        fail(where, "p", "modulus " + std::to_string(p) + " outside [2, " + std::to_string(PrimeField::kMaxModulus) + "]");
    if (!is_prime(static_cast<std::uint32_t>(p))) fail(where, "p", std::to_string(p) + " is not prime");
    int exponent = 1;
    if (const auto it = doc.find("H"); it != doc.end()) {
        const auto h = get_int(*it, where, "H");
        if (h < 1 || h > kMaxExponent)
            fail(where, "H", "exponent " + std::to_string(h) + " outside [1, " + std::to_string(kMaxExponent) +
                                 "]");
        exponent = static_cast<int>(h);
    }
    const auto& shape_doc = member(doc, "shape", where);
    if (!shape_doc.is_array() || shape_doc.empty()) fail(where, "shape", "expected a non-empty list of lengths");
    Shape shape;
    for (std::size_t d = 0; d < shape_doc.size(); ++d) {
        const auto n = get_int(shape_doc[d], where, "shape[" + std::to_string(d) + "]");
        if (n < 0 || n > (1 << 20)) fail(where, "shape[" + std::to_string(d) + "]", "length " + std::to_string(n) + " out of range");
        shape.push_back(static_cast<std::size_t>(n));
    }
    return {PrimeField(static_cast<std::uint32_t>(p)), exponent, std::move(shape)};
}

PrimeField::Elem field_entry(const PrimeField& f, const json& v, const std::string& where, const std::string& path) {
    const auto e = get_int(v, where, path);
    if (e < 0 || e >= static_cast<std::int64_t>(f.modulus()))
        fail(where, path, "residue " + std::to_string(e) + " outside [0, " + std::to_string(f.modulus()) + ")");
    return static_cast<PrimeField::Elem>(e);
}

Poly ring_entry(const BorderRing& ring, const json& v, const std::string& where, const std::string& path) {
    const auto h = static_cast<std::size_t>(ring.exponent());
    if (!v.is_array() || v.size() != h)
        fail(where, path, "expected a list of " + std::to_string(h) + " coefficients");
    Poly out;
    for (std::size_t i = 0; i < h; ++i)
        out.coeffs[i] = static_cast<std::uint16_t>(field_entry(ring.field(), v[i], where, path + "[" + std::to_string(i) + "]"));
    return out;
}

template <class Entry>
auto read_entries(const json& doc, std::size_t count, const std::string& where, Entry&& entry) {
    const auto& entries = member(doc, "entries", where);
    if (!entries.is_array()) fail(where, "entries", "expected a list");
    if (entries.size() != count)
        fail(where, "entries", "has " + std::to_string(entries.size()) + " entries, shape needs " + std::to_string(count));
    std::vector<decltype(entry(entries[0], std::string()))> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(entry(entries[i], "entries[" + std::to_string(i) + "]"));
    return out;
}

template <class Ring, class Entry>
Cpd<Ring> read_factors(const Ring& ring, const json& doc, const Shape& shape, const std::string& where, Entry&& entry) {
    const auto rank_i = get_int(member(doc, "rank", where), where, "rank");
    if (rank_i < 0 || rank_i > (1 << 20)) fail(where, "rank", "rank " + std::to_string(rank_i) + " out of range");
    const auto rank = static_cast<std::size_t>(rank_i);
    const auto& factors = member(doc, "factors", where);
    if (!factors.is_array() || factors.size() != shape.size())
        fail(where, "factors", "expected " + std::to_string(shape.size()) + " factor matrices");
    Cpd<Ring> cpd;
    for (std::size_t d = 0; d < shape.size(); ++d) {
        const std::string fpath = "factors[" + std::to_string(d) + "]";
        const auto& rows = factors[d];
        if (!rows.is_array() || rows.size() != shape[d])
            fail(where, fpath, "expected " + std::to_string(shape[d]) + " rows");
        Matrix<Ring> m(ring, shape[d], rank);
        for (std::size_t i = 0; i < shape[d]; ++i) {
            const std::string rpath = fpath + "[" + std::to_string(i) + "]";
            if (!rows[i].is_array() || rows[i].size() != rank)
                fail(where, rpath, "expected a row of " + std::to_string(rank) + " entries");
            for (std::size_t r = 0; r < rank; ++r) m(i, r) = entry(rows[i][r], rpath + "[" + std::to_string(r) + "]");
        }
        cpd.factors.push_back(std::move(m));
    }
    return cpd;
}

json header_json(const PrimeField& f, int exponent, const Shape& shape) {
    json doc = json::object();
    doc["p"] = f.modulus();
    if (exponent > 1) doc["H"] = exponent;
    doc["shape"] = shape;
    return doc;
}

json entry_json(const PrimeField&, PrimeField::Elem e) { return e; }

json entry_json(const BorderRing& ring, const Poly& e) {
    json out = json::array();
    for (int h = 0; h < ring.exponent(); ++h) out.push_back(e.coeffs[static_cast<std::size_t>(h)]);
    return out;
}

template <ScalarRing Ring>
json tensor_json(const Tensor<Ring>& t, const PrimeField& f, int exponent) {
    json doc = header_json(f, exponent, t.shape());
    json entries = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) entries.push_back(entry_json(t.ring(), t[i]));
    doc["entries"] = std::move(entries);
    return doc;
}

template <ScalarRing Ring>
json cpd_json(const Cpd<Ring>& cpd, const Ring& ring, const PrimeField& f, int exponent) {
    json doc = header_json(f, exponent, cpd.shape());
    doc["rank"] = cpd.rank();
    json factors = json::array();
    for (const auto& m : cpd.factors) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t r = 0; r < m.cols(); ++r) row.push_back(entry_json(ring, m(i, r)));
            rows.push_back(std::move(row));
        }
        factors.push_back(std::move(rows));
    }
    doc["factors"] = std::move(factors);
    return doc;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path.string() + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_scalar(const json& v) { return !v.is_array() && !v.is_object(); }

void format_into(const json& v, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    if (v.is_object() && !v.empty()) {
        out += "{\n";
        std::size_t k = 0;
        for (auto it = v.begin(); it != v.end(); ++it, ++k) {
            out += pad + json(it.key()).dump() + ": ";
            format_into(it.value(), out, depth + 1);
            out += k + 1 < v.size() ? ",\n" : "\n";
        }
        out += close_pad + "}";
        return;
    }
    if (v.is_array() && !v.empty()) {
        const std::string flat = v.dump();
        const bool scalars = std::all_of(v.begin(), v.end(), is_scalar);
        if (scalars || flat.size() <= 60) {
            // Same as dump() with a space after each comma.
            out += "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ", ";
                format_into(v[i], out, depth + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            out += pad;
            format_into(v[i], out, depth + 1);
            out += i + 1 < v.size() ? ",\n" : "\n";
        }
        out += close_pad + "]";
        return;
    }
    out += v.dump();
}

} // namespace

AnyTensor tensor_from_json(const json& doc, const std::string& where) {
    const auto header = read_header(doc, where);
    const std::size_t count = shape_volume(header.shape);
    if (header.exponent == 1) {
        const auto& f = header.field;
        auto data = read_entries(doc, count, where, [&](const json& v, const std::string& path) {
            return field_entry(f, v, where, path);
        });
        return Tensor<PrimeField>(f, header.shape, std::move(data));
    }
    const BorderRing ring(header.field, header.exponent);
    auto data = read_entries(doc, count, where, [&](const json& v, const std::string& path) {
        return ring_entry(ring, v, where, path);
    });
    return Tensor<BorderRing>(ring, header.shape, std::move(data));
}

AnyCpd cpd_from_json(const json& doc, const std::string& where) {
    const auto header = read_header(doc, where);
    if (header.exponent == 1) {
        const auto& f = header.field;
        return read_factors(f, doc, header.shape, where, [&](const json& v, const std::string& path) {
            return field_entry(f, v, where, path);
        });
    }
    const BorderRing ring(header.field, header.exponent);
    return read_factors(ring, doc, header.shape, where, [&](const json& v, const std::string& path) {
        return ring_entry(ring, v, where, path);
    });
}

json to_json(const Tensor<PrimeField>& t) { return tensor_json(t, t.ring(), 1); }
json to_json(const Tensor<BorderRing>& t) { return tensor_json(t, t.ring().field(), t.ring().exponent()); }

json to_json(const Cpd<PrimeField>& cpd) {
    if (cpd.factors.empty()) throw InvalidArgument("cannot serialize a CPD without factors");
    const auto& f = cpd.factors.front().ring();
    return cpd_json(cpd, f, f, 1);
}

json to_json(const Cpd<BorderRing>& cpd) {
    if (cpd.factors.empty()) throw InvalidArgument("cannot serialize a CPD without factors");
    const auto& ring = cpd.factors.front().ring();
    return cpd_json(cpd, ring, ring.field(), ring.exponent());
}

json to_json(const AnyTensor& t) {
    return std::visit([](const auto& v) { return to_json(v); }, t);
}

json to_json(const AnyCpd& cpd) {
    return std::visit([](const auto& v) { return to_json(v); }, cpd);
}

json parse_document(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(where + ": malformed document: " + e.what());
    }
}

AnyTensor read_tensor_file(const std::filesystem::path& path) {
    return tensor_from_json(parse_document(read_text(path), path.string()), path.string());
}

AnyCpd read_cpd_file(const std::filesystem::path& path) {
    return cpd_from_json(parse_document(read_text(path), path.string()), path.string());
}

void write_document(const std::filesystem::path& path, const json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument(path.string() + ": cannot open file for writing");
    out << format_document(doc) << '\n';
    if (!out) throw InvalidArgument(path.string() + ": write failed");
}

std::string format_document(const json& doc) {
    std::string out;
    format_into(doc, out, 0);
    return out;
}

} // namespace tcpd::io
