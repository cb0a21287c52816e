#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lcpoly/diagnostics.hpp"
#include "lcpoly/energy.hpp"
#include "lcpoly/geometry.hpp"
#include "lcpoly/invariants.hpp"
#include "lcpoly/sweep.hpp"

// JSON and CSV serialization. Every *_to_json has a matching *_from_json
// that reproduces the original value exactly; malformed documents throw
// SpecError naming the offending field.

namespace lcpoly {

using Json = nlohmann::ordered_json;

//! "Lx,Ly,Lz" -> validated prism. Throws InvalidInput on malformed text.
Prism parse_prism(std::string_view text);

//! "a:b" -> Interval. Throws InvalidInput on malformed text.
Interval parse_range(std::string_view text);

Json spec_to_json(const RationalMapSpec& spec);
//! Parses and validates. Missing fields take their defaults (epsilon 1, n 1, no factors, conformal).
RationalMapSpec spec_from_json(const Json& j);

/*!
 * Family template: a spec document where at most one factor coordinate is
 * the string "$s", plus an optional "name". Real and imaginary factors use
 * [position, sign]; complex factors may place "$s" in either the real or
 * imaginary slot of [re, im, sign].
 */
Json family_to_json(const ConfigFamily& family);
ConfigFamily family_from_json(const Json& j);

Json invariants_to_json(const InvariantsReport& report);
InvariantsReport invariants_from_json(const Json& j);

//! Absent optional values are written as null.
Json energy_report_to_json(const EnergyReport& report);
EnergyReport energy_report_from_json(const Json& j);

Json certificate_to_json(const LowerBoundCertificate& cert);
LowerBoundCertificate certificate_from_json(const Json& j);

Json family_minimum_to_json(const FamilyMinimum& result);
FamilyMinimum family_minimum_from_json(const Json& j);

Json field_check_to_json(const FieldCheck& check);
FieldCheck field_check_from_json(const Json& j);

//! Reads a whole file as JSON. Throws InvalidInput if unreadable or malformed.
Json read_json_file(const std::string& path);

//! Compact-free, deterministic rendering with two-space indent and trailing newline.
std::string dump(const Json& j);

//! Header "s,E,E_err,eps_scaled,lower,upper", 12 significant digits, s empty
//! for parameterless families.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

//! Header "x,y,z,nx,ny,nz" over a (grid+1)^3 lattice of the octant, origin skipped.
void write_field_csv(std::ostream& out, const RationalMapSpec& spec, const Prism& prism,
                     std::size_t grid);

}  // namespace lcpoly
