#pragma once

#include <json.hpp>

#include "hurwitz/finiteness.hpp"
#include "hurwitz/problem.hpp"

namespace hurwitz {

using Json = nlohmann::ordered_json;

/// Letter used when printing polynomials over the field: "x", or "t" when
/// the generator itself is called x.
std::string poly_variable(const NumberField& k);

Json field_json(const ProblemFile& p);
Json matrix_json(const Matrix& m);
Json order_json(const OrderResult& r);
Json orbit_json(const OrbitResult& r, bool emit_states);
Json closure_json(const ClosureResult& r, bool emit_elements);

Json analyze_report(const ProblemFile& p);
/// Throws InternalMismatch when the two characteristic polynomials differ.
Json coxeter_report(const ProblemFile& p, const OrderOptions& opt);
Json orbit_report(const ProblemFile& p, std::size_t cap, bool emit_states);
Json group_report(const ProblemFile& p, std::size_t cap, bool emit_elements);
Json certify_report(const ProblemFile& p, const CertifyOptions& opt, bool emit_states);

}  // namespace hurwitz
