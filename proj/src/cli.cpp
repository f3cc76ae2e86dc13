#include "fga/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <memory>
#include <sstream>

#include "fga/complex.hpp"
#include "fga/dynamics.hpp"
#include "fga/error.hpp"
#include "fga/text.hpp"

namespace fga::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Dot, Csv, JsonLines };

struct Engine {
  Engine(const std::string& path, std::size_t cap, std::size_t vertex_cap)
      : sys(build_system(load_group_file(path), cap)), g(sys), grp(g), cx(grp, vertex_cap), dyn(cx) {}
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  CoxeterSystem sys;
  Garside g;
  ArtinGroup grp;
  Complex cx;
  Dynamics dyn;

  std::string str(const ArtinElement& x) const { return render(g, x); }
  std::string str(const GVertex& v) const { return render(g, v); }
  std::string str(Atom a) const { return render_atom(g, a); }
  ArtinElement el(const std::string& s) const { return parse_element(grp, s); }
  GVertex vx(const std::string& s) const { return parse_vertex(grp, s); }
  Atom atom(const std::string& s) const {
    const ParsedItinerary p = parse_itinerary(g, s);
    if (p.atoms.size() != 1 || p.repeats) throw Error(ErrorKind::Parse, "expected a single atom: '" + s + "'");
    return p.atoms.front();
  }
  Json strs(std::span<const GVertex> vs) const {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(str(v));
    return a;
  }
  Json strs(std::span<const Atom> as) const {
    Json a = Json::array();
    for (Atom x : as) a.push_back(str(x));
    return a;
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "none";
  return v.dump();
}

bool all_scalar(const Json& a) {
  return std::all_of(a.begin(), a.end(), [](const Json& e) { return e.is_primitive(); });
}

std::string joined(const Json& a) {
  std::string s;
  for (const auto& e : a) {
    if (!s.empty()) s += ' ';
    s += scalar_text(e);
  }
  return s;
}

// key: value lines; objects flatten to dotted keys, arrays of arrays become
// indented rows.
void print_text(std::ostream& out, const Json& obj, const std::string& prefix = "") {
  for (const auto& [key, v] : obj.items()) {
    const std::string k = prefix + key;
    if (v.is_object()) {
      print_text(out, v, k + ".");
    } else if (v.is_array() && all_scalar(v)) {
      out << k << ':' << (v.empty() ? "" : " " + joined(v)) << '\n';
    } else if (v.is_array()) {
      out << k << ":\n";
      for (const auto& row : v) out << "  " << (row.is_array() ? joined(row) : scalar_text(row)) << '\n';
    } else {
      out << k << ": " << scalar_text(v) << '\n';
    }
  }
}

void emit(std::ostream& out, Format f, const Json& obj) {
  if (f == Format::JsonLines) {
    out << obj.dump() << '\n';
  } else if (obj.size() == 1 && obj.begin()->is_primitive()) {
    out << scalar_text(*obj.begin()) << '\n';
  } else {
    print_text(out, obj);
  }
}

Json homology_json(const HomologyProfile& h) {
  Json j;
  j["empty"] = h.empty;
  j["betti"] = h.betti;
  std::string tor;
  for (std::size_t d = 0; d < h.torsion.size(); ++d)
    for (const auto& t : h.torsion[d]) tor += (tor.empty() ? "" : " ") + ("H" + std::to_string(d) + ":Z" + t.str());
  j["torsion"] = tor.empty() ? "none" : tor;
  Json sphere = nullptr;
  for (int k = -1; k <= static_cast<int>(h.betti.size()); ++k)
    if (h.sphere(k)) sphere = k;
  j["sphere"] = sphere;
  j["acyclic"] = h.acyclic();
  return j;
}

Json link_json(const Engine& e, const LinkComplex& l) {
  Json j;
  j["members"] = e.strs(std::span<const Atom>(l.members));
  Json edges = Json::array();
  for (auto [a, b] : l.edges) edges.push_back(Json::array({e.str(l.members[a]), e.str(l.members[b])}));
  j["edges"] = edges;
  j["homology"] = homology_json(reduced_homology(l.complex()));
  return j;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string kind_name(TorsionKind k) { return k == TorsionKind::Type1 ? "type1" : "type2"; }

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return kUsage;
    case ErrorKind::GroupFile:
    case ErrorKind::NotFiniteType: return kGroupFile;
    case ErrorKind::CapExceeded: return kCap;
    default: return kDomain;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin groups of finite type: normal forms, the complex X(G), torsion and boundary dynamics", "fga"};
  app.require_subcommand(1);

  std::string group_path;
  Format format = Format::Text;
  std::size_t cap = kDefaultCap;
  std::size_t vertex_cap = kDefaultVertexCap;
  app.add_option("-g,--group", group_path, "group file")->required();
  app.add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text},
                                                                        {"dot", Format::Dot},
                                                                        {"csv", Format::Csv},
                                                                        {"json-lines", Format::JsonLines}}));
  app.add_option("--cap", cap, "Coxeter group enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--vertex-cap", vertex_cap, "vertex cap for balls")->check(CLI::PositiveNumber);

  std::string a1, a2, prefix, at = "1";
  int radius = 0, n = 0;
  bool global = false;

  auto* info = app.add_subcommand("info", "order, Delta, atoms, irreducibility");
  auto* nf = app.add_subcommand("nf", "canonical form");
  nf->add_option("word", a1)->required();
  auto* mul = app.add_subcommand("mul", "product x y");
  mul->add_option("x", a1)->required();
  mul->add_option("y", a2)->required();
  auto* inv = app.add_subcommand("inv", "inverse");
  inv->add_option("x", a1)->required();
  auto* conj = app.add_subcommand("conj", "conjugate y x y^-1");
  conj->add_option("x", a1)->required();
  conj->add_option("y", a2)->required();
  auto* dist = app.add_subcommand("dist", "d_at and both d_wd");
  dist->add_option("v", a1)->required();
  dist->add_option("w", a2)->required();
  auto* geod = app.add_subcommand("geodesic", "normal-form geodesic");
  geod->add_option("v", a1)->required();
  geod->add_option("w", a2)->required();
  auto* ball = app.add_subcommand("ball", "ball in the atom metric");
  ball->add_option("r", radius)->required()->check(CLI::NonNegativeNumber);
  ball->add_option("--center", at, "center vertex");
  auto* links = app.add_subcommand("links", "ascending and descending links");
  links->add_option("v", a1)->required();
  auto* charney = app.add_subcommand("charney", "Charney graph");
  auto* order = app.add_subcommand("order", "order in G");
  order->add_option("g", a1)->required();
  auto* torsion = app.add_subcommand("torsion", "torsion classification");
  torsion->add_option("g", a1)->required();
  auto* trans = app.add_subcommand("translation", "translation length bounds");
  trans->add_option("g", a1)->required();
  trans->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  auto* act = app.add_subcommand("act", "action on an itinerary prefix");
  act->add_option("g", a1)->required();
  act->add_option("--prefix", prefix)->required();
  auto* center = app.add_subcommand("center", "centers of a vertex set");
  center->add_option("vertices", a1)->required();
  center->add_option("--radius", radius, "search ball radius around --at")->check(CLI::NonNegativeNumber);
  center->add_option("--at", at, "search ball center");
  center->add_flag("--global", global, "search all of X(G) by descent");
  auto* minset = app.add_subcommand("minset", "minimal displacement set in a ball");
  minset->add_option("g", a1)->required();
  minset->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  minset->add_option("--at", at, "search ball center");
  auto* witness = app.add_subcommand("witness", "density witness");
  witness->add_option("target", a1)->required();
  witness->add_option("head", a2)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: Usage: " << e.what() << '\n';
    return kUsage;
  }

  auto need = [&](std::initializer_list<Format> ok, const char* cmd) {
    if (format == Format::Text || format == Format::JsonLines) return;
    if (std::find(ok.begin(), ok.end(), format) == ok.end())
      throw UsageError(std::string("format not supported by ") + cmd);
  };

  try {
    const Engine e(group_path, cap, vertex_cap);
    const ArtinGroup& G = e.grp;
    Json j;

    if (info->parsed()) {
      need({}, "info");
      const auto& names = e.sys.matrix().generators();
      j["type"] = e.sys.type_name();
      j["rank"] = e.sys.rank();
      j["generators"] = names;
      j["order"] = e.sys.order();
      j["delta_length"] = e.sys.delta_length();
      j["delta"] = e.sys.word_string(e.sys.delta());
      j["atoms"] = e.g.proper_atoms().size();
      j["irreducible"] = e.sys.irreducible();
      Json comps = Json::array();
      for (const auto& c : e.sys.components()) {
        Json row = Json::array();
        for (int s : c) row.push_back(names[static_cast<std::size_t>(s)]);
        comps.push_back(row);
      }
      j["components"] = comps;
    } else if (nf->parsed()) {
      need({}, "nf");
      j["nf"] = e.str(e.el(a1));
    } else if (mul->parsed()) {
      need({}, "mul");
      j["product"] = e.str(G.mul(e.el(a1), e.el(a2)));
    } else if (inv->parsed()) {
      need({}, "inv");
      j["inverse"] = e.str(G.inv(e.el(a1)));
    } else if (conj->parsed()) {
      need({}, "conj");
      j["conjugate"] = e.str(G.conj(e.el(a1), e.el(a2)));
    } else if (dist->parsed()) {
      need({}, "dist");
      const GVertex v = e.vx(a1), w = e.vx(a2);
      j["d_at"] = e.cx.d_at(v, w);
      j["d_wd_vw"] = e.cx.d_wd(v, w);
      j["d_wd_wv"] = e.cx.d_wd(w, v);
    } else if (geod->parsed()) {
      need({}, "geodesic");
      const auto path = e.cx.geodesic(e.vx(a1), e.vx(a2));
      j["length"] = path.size() - 1;
      j["path"] = e.strs(std::span<const GVertex>(path));
    } else if (ball->parsed()) {
      need({Format::Dot, Format::Csv}, "ball");
      const Ball b = e.cx.ball(e.vx(at), radius);
      if (format == Format::Dot) {
        out << ball_dot(e.g, b);
        return kOk;
      }
      if (format == Format::Csv) {
        out << ball_csv(e.cx, b);
        return kOk;
      }
      j["center"] = e.str(b.center);
      j["radius"] = b.radius;
      j["size"] = b.size();
      j["edges"] = b.edges.size();
      Json rows = Json::array();
      for (std::size_t i = 0; i < b.size(); ++i)
        rows.push_back(Json::array({e.str(b.vertices[i]), b.dist[i], e.cx.wordnorm(b.vertices[i])}));
      j["vertices"] = rows;
    } else if (links->parsed()) {
      need({}, "links");
      const GVertex v = e.vx(a1);
      const Links l = e.cx.links(v);
      j["vertex"] = e.str(v);
      j["pivot"] = e.str(l.pivot);
      std::vector<char> seen(static_cast<std::size_t>(e.sys.rank()), 0);
      for (int s : e.sys.word(l.pivot.elt)) seen[static_cast<std::size_t>(s)] = 1;
      j["pivot_full_support"] = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
      j["ascending"] = link_json(e, l.ascending);
      j["descending"] = link_json(e, l.descending);
    } else if (charney->parsed()) {
      need({Format::Dot}, "charney");
      const CharneyGraph& cg = e.dyn.charney();
      if (format == Format::Dot) {
        out << charney_dot(e.g, cg);
        return kOk;
      }
      j["nodes"] = e.strs(std::span<const Atom>(cg.nodes));
      j["edge_count"] = cg.edge_count();
      j["components"] = cg.component_count;
      j["strongly_connected"] = cg.strongly_connected();
      Json edges = Json::array();
      for (std::size_t i = 0; i < cg.nodes.size(); ++i)
        for (int t : cg.out[i]) edges.push_back(Json::array({e.str(cg.nodes[i]), e.str(cg.nodes[static_cast<std::size_t>(t)])}));
      j["edges"] = edges;
    } else if (order->parsed()) {
      need({}, "order");
      const auto o = e.dyn.order_in_G(e.el(a1));
      j["order"] = o ? Json(*o) : Json("infinite");
    } else if (torsion->parsed()) {
      need({}, "torsion");
      const ArtinElement x = e.el(a1);
      const TorsionClass c = e.dyn.classify_torsion(x);
      j["element"] = e.str(x);
      j["kind"] = kind_name(c.kind);
      j["b"] = e.str(c.b);
      j["m"] = c.m;
      j["order"] = c.order;
      j["standard_generator"] = e.str(e.dyn.standard_generator(c));
      j["conjugator"] = e.str(c.conjugator);
      j["simplex"] = e.strs(std::span<const GVertex>(c.simplex));
    } else if (trans->parsed()) {
      need({}, "translation");
      const TranslationBounds t = e.dyn.translation_bounds(e.el(a1), n);
      j["a"] = t.a;
      j["inf"] = std::to_string(t.inf_num) + "/" + std::to_string(t.inf_den);
    } else if (act->parsed()) {
      need({}, "act");
      const ArtinElement x = e.el(a1);
      ParsedItinerary it = parse_itinerary(e.g, prefix);
      if (it.repeats) {
        // enough copies of the tail atom to cover the Deltas g can absorb
        const std::size_t extra = x.pos.size() + 2 + static_cast<std::size_t>(std::abs(x.k));
        it.atoms.insert(it.atoms.end(), extra, it.atoms.back());
      }
      const PrefixImage img = e.dyn.act_prefix(x, it.atoms);
      std::string image;
      for (int i = 0; i < img.guaranteed; ++i)
        image += (i ? "." : "") + e.str(img.prefix[static_cast<std::size_t>(i)]);
      j["image"] = image;
      j["guaranteed"] = img.guaranteed;
      j["stripped"] = img.stripped;
    } else if (center->parsed()) {
      need({}, "center");
      std::vector<GVertex> t;
      for (const auto& s : split(a1, ',')) t.push_back(e.vx(s));
      const CenterResult r = global ? e.cx.global_center(t, G.base_vertex()) : e.cx.center(t, e.cx.ball(e.vx(at), radius));
      j["radius"] = r.radius;
      j["centers"] = e.strs(std::span<const GVertex>(r.centers));
      j["interior"] = r.interior;
      j["simplex"] = e.cx.is_simplex(r.centers);
    } else if (minset->parsed()) {
      need({}, "minset");
      const MinsetResult r = e.cx.minset_in(e.el(a1), e.cx.ball(e.vx(at), radius));
      j["displacement"] = r.displacement;
      j["vertices"] = e.strs(std::span<const GVertex>(r.vertices));
      j["interior"] = r.interior;
    } else if (witness->parsed()) {
      need({}, "witness");
      const ParsedItinerary target = parse_itinerary(e.g, a1);
      if (target.repeats) throw Error(ErrorKind::InvalidArgument, "witness target must be a finite prefix");
      j["witness"] = e.str(e.dyn.density_witness(target.atoms, e.atom(a2)));
    }

    emit(out, format, j);
    return kOk;
  } catch (const UsageError& x) {
    err << "error: Usage: " << x.what() << '\n';
    return kUsage;
  } catch (const Error& x) {
    err << "error: " << to_string(x.kind()) << ": " << x.what() << '\n';
    return exit_code(x.kind());
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace fga::cli
