#ifndef CYCLOLAB_REPORT_HPP
#define CYCLOLAB_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cyclolab/cyclotomic.hpp"
#include "cyclolab/galmod.hpp"
#include "cyclolab/integers.hpp"

namespace cyclolab {

using Json = nlohmann::ordered_json;

/* Report documents: every command emits {"schema": 1, "command": ...} with
 * integers and rationals as decimal strings, so values survive any JSON
 * parser unchanged and repeated runs are byte-identical. */
Json make_document(const std::string& command);
std::string dec(const Int& v);
Json rat_json(const Rat& v);                      // {"num": "...", "den": "..."}
Json cyclo_json(const CycloRational& v);          // {"level": m, "coefficients": [...]}
Json divisors_json(const std::vector<Int>& ds);

/* One-line module descriptor p:e1,e2,...:s11,s12,... with the action read
 * row-major; parse_module_descriptor inverts it and validates the module. */
std::string module_descriptor(const GModule& M);
GModule parse_module_descriptor(const std::string& text);

/* Comma-joined scan row; fields are plain numerals, so no quoting. */
std::string csv_line(const std::vector<std::string>& fields);

} // namespace cyclolab

#endif
