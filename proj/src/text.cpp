#include "fga/text.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "fga/error.hpp"

namespace fga {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

bool valid_name(const std::string& name) {
  if (name.empty() || name == "D" || name == "1") return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return !std::isdigit(static_cast<unsigned char>(name[0]));
}

}  // namespace

CoxeterMatrix parse_group(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::optional<CoxeterMatrix> matrix;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (!matrix) {
      if (toks[0] != "generators:") throw Error(ErrorKind::GroupFile, where + "expected 'generators:'");
      std::vector<std::string> names(toks.begin() + 1, toks.end());
      for (const auto& n : names)
        if (!valid_name(n)) throw Error(ErrorKind::GroupFile, where + "invalid generator name '" + n + "'");
      matrix.emplace(std::move(names));
      continue;
    }
    if (toks[0] != "m:" || toks.size() != 4) throw Error(ErrorKind::GroupFile, where + "expected 'm: s t k'");
    const int s = matrix->index_of(toks[1]);
    const int t = matrix->index_of(toks[2]);
    if (s < 0 || t < 0) throw Error(ErrorKind::GroupFile, where + "unknown generator");
    int k = 0;
    auto [p, ec] = std::from_chars(toks[3].data(), toks[3].data() + toks[3].size(), k);
    if (ec != std::errc{} || p != toks[3].data() + toks[3].size())
      throw Error(ErrorKind::GroupFile, where + "bad exponent '" + toks[3] + "'");
    if (s == t) throw Error(ErrorKind::GroupFile, where + "m(s,s) cannot be set");
    if (k < 2) throw Error(ErrorKind::GroupFile, where + "exponent must be >= 2");
    matrix->set(s, t, k);
  }
  if (!matrix) throw Error(ErrorKind::GroupFile, "missing 'generators:' line");
  return *matrix;
}

CoxeterMatrix parse_group_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_group(in);
}

CoxeterMatrix load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::GroupFile, "cannot open group file '" + path + "'");
  return parse_group(in);
}

std::string render_atom(const Garside& g, Atom a) {
  if (a.elt == kIdentity) return "1";
  if (a == g.delta()) return "D";
  return g.system().word_string(a.elt);
}

std::string render(const Garside& g, const PositiveElement& p) {
  if (p.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '.';
    out += render_atom(g, p[i]);
  }
  return out;
}

std::string render(const Garside& g, const ArtinElement& x) {
  if (x.k == 0) return render(g, x.pos);
  std::string out = x.k == 1 ? "D" : "D^" + std::to_string(x.k);
  if (!x.pos.empty()) out += "." + render(g, x.pos);
  return out;
}

std::string render(const Garside& g, const GVertex& v) { return v.pos.empty() ? "*" : render(g, v.pos); }

namespace {

// Longest generator name matching at text[pos]; -1 if none.
int match_generator(const CoxeterMatrix& m, std::string_view text, std::size_t pos, std::size_t& len) {
  int best = -1;
  len = 0;
  for (int s = 0; s < m.rank(); ++s) {
    const auto& name = m.generators()[static_cast<std::size_t>(s)];
    if (name.size() > len && text.substr(pos, name.size()) == name) {
      best = s;
      len = name.size();
    }
  }
  return best;
}

class ElementParser {
 public:
  ElementParser(const ArtinGroup& group, std::string_view text) : grp_(group), text_(text) {}

  ArtinElement parse() {
    ArtinElement x = product();
    skip_ws();
    if (pos_ != text_.size()) parse_error("unexpected '" + std::string(1, text_[pos_]) + "' in element");
    return x;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t v = 0;
    auto first = text_.data() + start + (start < text_.size() && text_[start] == '+' ? 1 : 0);
    auto [p, ec] = std::from_chars(first, text_.data() + pos_, v);
    if (ec != std::errc{} || p != text_.data() + pos_) parse_error("expected an integer exponent");
    return v;
  }
  bool trailing_inverse() {
    // "^-1" followed by end of input or ')'.
    std::size_t save = pos_;
    if (!at('^')) return false;
    ++pos_;
    if (integer() == -1) {
      skip_ws();
      if (pos_ == text_.size() || text_[pos_] == ')') return true;
    }
    pos_ = save;
    return false;
  }

  ArtinElement product() {
    ArtinElement acc = grp_.identity();
    while (true) {
      skip_ws();
      if (pos_ == text_.size() || text_[pos_] == ')') return acc;
      const char c = text_[pos_];
      if (c == '.') {
        ++pos_;
        continue;
      }
      if (c == '^') {
        if (trailing_inverse()) {
          acc = grp_.inv(acc);
          continue;
        }
        parse_error("exponents are only allowed on 'D', on parentheses, or as a trailing '^-1'");
      }
      if (c == '(') {
        ++pos_;
        ArtinElement inner = product();
        if (!at(')')) parse_error("missing ')'");
        ++pos_;
        if (at('^')) {
          ++pos_;
          inner = grp_.pow(inner, integer());
        }
        acc = grp_.mul(acc, inner);
        continue;
      }
      std::size_t len = 0;
      const int s = match_generator(grp_.system().matrix(), text_, pos_, len);
      if (s >= 0) {
        pos_ += len;
        acc = grp_.mul(acc, grp_.from_atom(grp_.garside().generator(s)));
        continue;
      }
      if (c == 'D') {
        ++pos_;
        std::int64_t k = 1;
        if (at('^')) {
          ++pos_;
          k = integer();
        }
        acc = grp_.mul(acc, grp_.delta_power(k));
        continue;
      }
      if (c == '1') {
        ++pos_;
        continue;
      }
      parse_error("unknown symbol '" + std::string(1, c) + "' in element");
    }
  }

  const ArtinGroup& grp_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<int> parse_generator_word(const CoxeterMatrix& m, std::string_view word) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::size_t len = 0;
    const int s = match_generator(m, word, pos, len);
    if (s < 0) parse_error("unknown generator at '" + std::string(word.substr(pos)) + "'");
    out.push_back(s);
    pos += len;
  }
  return out;
}

ArtinElement parse_element(const ArtinGroup& group, std::string_view text) {
  return ElementParser(group, text).parse();
}

GVertex parse_vertex(const ArtinGroup& group, std::string_view text) {
  if (text == "*") return group.base_vertex();
  return group.to_vertex(parse_element(group, text));
}

ParsedItinerary parse_itinerary(const Garside& g, std::string_view text) {
  ParsedItinerary out;
  if (text.size() >= 3 && text.substr(text.size() - 3) == "...") {
    out.repeats = true;
    text.remove_suffix(3);
  }
  const auto& sys = g.system();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    if (dot == std::string_view::npos) dot = text.size();
    const auto tok = text.substr(start, dot - start);
    if (tok.empty()) parse_error("empty atom in itinerary");
    Element e = kIdentity;
    const auto gens = parse_generator_word(sys.matrix(), tok);
    for (int s : gens) e = sys.right_mult(e, s);
    if (sys.length(e) != static_cast<int>(gens.size()))
      parse_error("'" + std::string(tok) + "' is not a reduced word, so not an atom");
    out.atoms.push_back(Atom{e});
    start = dot + 1;
  }
  if (!g.is_normal(out.atoms)) parse_error("itinerary is not a path in the Charney graph");
  if (out.repeats && !g.is_normal_pair(out.atoms.back(), out.atoms.back()))
    parse_error("the repeated atom does not follow itself in the Charney graph");
  for (Atom a : out.atoms)
    if (a == g.delta()) parse_error("itineraries cannot contain Delta");
  return out;
}

}  // namespace fga
