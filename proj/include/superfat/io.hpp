#pragma once

// Scheme-spec ingestion and machine-readable reports.
//
// Scheme spec: a JSON array of components, or an object with a "components"
// array. Each component is
//   {"kind": "simple"|"fat"|"jet"|"square"|"collision", "m": int,
//    "point": [a, b, c], "frame": [[l1], [l2]], "random": bool}
// Frames list two lines through the point. A jet lies on the first frame
// line; a collision has the second frame line as its distinguished line.
// "random": true draws the point and frame from the seeded stream.
//
// JSON output uses sorted keys. CSV columns are fixed:
//   d,s,extra_length,expected,computed,status,seed,prime,trials
// preceded by one "# prime=... seed=... trials=..." comment line.

#include "superfat/horace.hpp"
#include "superfat/interp.hpp"
#include "superfat/postulation.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace superfat {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws ParseError on malformed input and SchemeError on an invalid scheme
/// (frame lines missing the point, coincident supports, zero coordinates).
SchemeUnion parse_scheme_spec(const std::string& text, ScalarStream& stream);

struct RunHeader {
    std::vector<std::uint64_t> primes;
    std::uint64_t seed = 0;
    int trials = 3;
};

nlohmann::json to_json(const RunHeader& h);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const HoraceStep& st);
nlohmann::json to_json(const ReductionReport& r);
nlohmann::json to_json(const ObstructionReport& r);
nlohmann::json to_json(const DoublePointReport& r);

std::string certificates_json(const RunHeader& h, const std::vector<Certificate>& rows);
std::string certificates_csv(const RunHeader& h, const std::vector<Certificate>& rows);

/// Plain-text step table for terminals.
std::string step_table(const ReductionReport& r);

}  // namespace superfat
