#pragma once

#include <string>

#include "twchoose/certify.hpp"
#include "twchoose/solver.hpp"

namespace twc {

// "p/q" with "/1" omitted; parsing accepts unreduced fractions and plain
// integers, and rejects zero denominators.
std::string rational_to_string(const rational& r);
rational rational_from_string(const std::string& s);

// Schema 1 certificate document. Field order is fixed so reruns are
// byte-identical; the graph hash travels as 16 lowercase hex digits.
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

// {"vertices": [[...], ...], "edges": [[...], ...]} with rationals as
// strings. Parsing validates the shape against the graph.
std::string lists_to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const Graph& g, const std::string& text);

std::string weighting_to_json(const Weighting& w);
Weighting weighting_from_json(const std::string& text);

}  // namespace twc
