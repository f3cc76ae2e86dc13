#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "fga/artin.hpp"

namespace fga {

/// Parses the plain-text group file:
///   generators: s1 s2 ... sn
///   m: si sj k
/// '#' starts a comment; omitted pairs default to 2.
CoxeterMatrix parse_group(std::istream& in);
CoxeterMatrix parse_group_string(std::string_view text);
CoxeterMatrix load_group_file(const std::string& path);

/// Atom as its lexicographically least reduced word; "1" for the identity,
/// "D" for Delta.
std::string render_atom(const Garside& g, Atom a);
/// Dot-separated atoms; "1" for the empty form.
std::string render(const Garside& g, const PositiveElement& p);
/// "D^k . w1.w2..." with the Delta part omitted when k = 0 ("D" when k = 1).
std::string render(const Garside& g, const ArtinElement& x);
std::string render(const Garside& g, const GVertex& v);

/// Generator word such as "aab" (longest-match on generator names, 'D' for
/// Delta is rejected here).
std::vector<int> parse_generator_word(const CoxeterMatrix& m, std::string_view word);

/// Element syntax: factors separated by '.', each factor a run of generator
/// names and 'D' (optionally 'D^k'), '1' for the identity, parentheses for
/// grouping. A trailing '^-1' inverts the whole element unless it directly
/// follows a 'D'. Plain generator strings are accepted unnormalized.
ArtinElement parse_element(const ArtinGroup& group, std::string_view text);

/// Special representative of the parsed element.
GVertex parse_vertex(const ArtinGroup& group, std::string_view text);

/// Dot-separated atom words, each parsed as a single atom (must be reduced),
/// with an optional "..." suffix repeating the last atom. The returned
/// flag reports the suffix.
struct ParsedItinerary {
  std::vector<Atom> atoms;
  bool repeats = false;
};
ParsedItinerary parse_itinerary(const Garside& g, std::string_view text);

}  // namespace fga
