#ifndef ORDCOMP_IO_HPP
#define ORDCOMP_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ordcomp/compactify.hpp"
#include "ordcomp/corpus.hpp"
#include "ordcomp/dlat.hpp"
#include "ordcomp/rings.hpp"
#include "ordcomp/suite.hpp"

namespace ordcomp {

// Insertion-ordered so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Reads and parses a JSON file. Throws InputError carrying "path:line:col"
// for syntax errors and for empty files.
Json load_json_file(const std::filesystem::path& path);
Json parse_json_text(std::string_view text, std::string_view origin = "<input>");
std::string read_file(const std::filesystem::path& path);

// A document given inline, or as a path string relative to `base`.
Json resolve_ref(const Json& j, const std::filesystem::path& base, const std::string& where = "$");

// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

// Every decoder throws InputError naming the JSON path of the offending value.
// Top-level documents must carry "format": 1; nested documents may omit it.
Carrier carrier_from_json(const Json& j, const std::string& where = "$");
Json to_json(const Carrier& c);

Point point_from_json(const Json& j, const Carrier& c, const std::string& where = "$");
RSet rset_from_json(const Json& j, const CarrierPtr& c, const std::string& where = "$");
Json to_json(const RSet& s);

OrderPresentation order_from_json(const Json& j, const CarrierPtr& c, const std::string& where = "$");
Json to_json(const OrderPresentation& o);

SpacePtr space_from_json(const Json& j, const std::string& where = "$");
Json to_json(const SpacePresentation& x);

// Body of a map document between given spaces: {"graph": [[x, f(x)], ...]}
// or {"named": {...}, "blocks": {B: {"into": B'} | {"constant": p}}, "exceptions": [[x, y], ...]}.
SpaceMap map_from_json(const Json& j, const SpacePtr& source, const SpacePtr& target,
                       const std::string& where = "$");
// Standalone map document: the body plus "source" and "target" space documents.
SpaceMap map_document_from_json(const Json& j, const std::string& where = "$");
Json to_json(const SpaceMap& f, bool with_spaces = false);

PairPtr pair_from_json(const Json& j, const std::string& where = "$");
Json to_json(const CompactificationPair& p);

FinDLat lattice_from_json(const Json& j, const std::string& where = "$");
Json to_json(const FinDLat& d);

// {"space": space-doc, "explicit": [RSet-doc, ...]} or {"pullback": pair-ref},
// where a pair reference is an inline pair document, "builtin:<name>", or a
// path relative to `base`.
UpsetRing ring_from_json(const Json& j, const std::filesystem::path& base = {}, const std::string& where = "$");
Json to_json(const UpsetRing& r);

// {"pairs": [{"name", "pair": pair-ref}], "spaces": [{"name", "space": space-doc | path}]}.
Corpus corpus_from_json(const Json& j, const std::filesystem::path& base = {}, const std::string& where = "$");
Json to_json(const Corpus& c);

// Presented pair by name from the built-in corpus; throws InputError if unknown.
PairPtr builtin_pair(const std::string& name);

Json to_json(const Verdict& v, const Carrier* carrier = nullptr);
Json to_json(const SpaceFlags& f, const Carrier& c);
Json to_json(const PairFlags& f, const CompactificationPair& p);
Json to_json(const SuiteReport& r);

}  // namespace ordcomp

#endif  // ORDCOMP_IO_HPP
