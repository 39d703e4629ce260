#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "affsurf/tensor.hpp"
#include "affsurf/tolerances.hpp"
#include "affsurf/type_a.hpp"
#include "affsurf/type_b.hpp"

namespace affsurf {

inline const char* tool_version() { return "affsurf 0.1.0"; }

// One line of batch input. The six numbers are ordered
// (g_11^1, g_11^2, g_12^1, g_12^2, g_22^1, g_22^2); a "minus" orientation is
// applied by an orientation-reversing change of coordinates before
// classification.
struct InputRecord {
    std::string id;
    Family family = Family::A;
    std::array<double, 6> gamma{};
    bool orientation_minus = false;
};

using ParseResult = std::variant<InputRecord, std::string>;
ParseResult parse_input_record(const std::string& line);

nlohmann::ordered_json input_record_json(const InputRecord& rec);

// Full classification of one record; never throws on valid records.
nlohmann::ordered_json classification_record(const InputRecord& rec, const Tolerances& tol);

// Canonical form / chart assignment only.
nlohmann::ordered_json canonical_record(const InputRecord& rec, const Tolerances& tol);

// Equivalence verdict with a witness when one is constructed. Both records
// must carry the same family (checked by the caller).
nlohmann::ordered_json equivalence_record(const InputRecord& a, const InputRecord& b,
                                          bool oriented, const Tolerances& tol);

// Stream drivers used by the command line tool. Records are processed in
// input order; a malformed line yields an error record and the exit code 1.
int run_classify(std::istream& in, std::ostream& out, const Tolerances& tol,
                 const std::string& format);
int run_canon(std::istream& in, std::ostream& out, const Tolerances& tol,
              const std::string& format);
// Requires exactly two records of the same family; returns 2 on usage errors.
int run_equiv(std::istream& in, std::ostream& out, bool oriented, const Tolerances& tol,
              const std::string& format);
int run_sample(std::ostream& out, Family family, std::optional<SigClass> sig, int n,
               std::uint64_t seed, const std::string& format);

} // namespace affsurf
