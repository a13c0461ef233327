#pragma once

#include <string>

#include "json.hpp"

#include "hfdts/diagram.hpp"
#include "hfdts/f2_matrix.hpp"
#include "hfdts/open_book.hpp"

namespace hfdts {

using Json = nlohmann::ordered_json;

Json raw_to_json(const RawComplex& raw);
RawComplex raw_from_json(const Json& j);

Json diagram_to_json(const HeegaardDiagram& d);
/// Reads a diagram document; the complex is validated (InvalidComplex with the
/// violation list on failure).
HeegaardDiagram diagram_from_json(const Json& j);
/// Only the complex part, without validation.
RawComplex raw_of_diagram_json(const Json& j);

Json matrix_to_json(const F2Matrix& m);
F2Matrix matrix_from_json(const Json& j);

/// Open book document: page {genus, boundary}, monodromy [{curve, sign}],
/// optional delta {curve}, optional framing. Signs are +1/-1 or "+"/"-".
Json open_book_to_json(const OpenBookSpec& ob);
OpenBookSpec open_book_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace hfdts
