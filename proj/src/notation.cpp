#include "kht/notation.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "kht/errors.hpp"

namespace kht {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks;
    size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) &&
             raw[i] != '#')
        ++i;
      toks.push_back(Token{raw.substr(start, i - start), lineno,
                           static_cast<int>(start) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

// Occurrence of an edge label at a crossing port.
struct PortUse {
  int crossing;
  int port;
  bool incoming;
  Token tok;
};

bool port_is_incoming(int port, int sign) {
  int over_in = sign > 0 ? 3 : 1;
  return port == 0 || port == over_in;
}

}  // namespace

TangleDiagram parse_diagram(const std::string& text) {
  auto lines = tokenize(text);

  struct CrossingSpec {
    int sign;
    std::array<Token, 4> labels;
  };
  std::vector<CrossingSpec> xs;
  std::vector<std::pair<Token, Token>> arcs;
  std::vector<Token> border;
  bool have_border = false;
  int loops = 0;

  for (const auto& toks : lines) {
    const Token& head = toks[0];
    if (head.text == "X+" || head.text == "X-") {
      if (toks.size() != 5)
        throw ParseError("crossing needs exactly 4 edge labels", head.line,
                         head.col);
      CrossingSpec s;
      s.sign = head.text == "X+" ? 1 : -1;
      for (int i = 0; i < 4; ++i) s.labels[i] = toks[i + 1];
      xs.push_back(s);
    } else if (head.text == "A") {
      if (toks.size() != 3)
        throw ParseError("arc needs exactly 2 boundary labels", head.line,
                         head.col);
      if (toks[1].text == toks[2].text)
        throw ParseError("arc endpoints must differ", toks[2].line,
                         toks[2].col);
      arcs.emplace_back(toks[1], toks[2]);
    } else if (head.text == "O") {
      if (toks.size() != 1)
        throw ParseError("loop takes no labels", head.line, head.col);
      ++loops;
    } else if (head.text == "B") {
      if (have_border)
        throw ParseError("duplicate boundary declaration", head.line, head.col);
      have_border = true;
      border.assign(toks.begin() + 1, toks.end());
    } else if (head.text == "X") {
      throw ParseError("crossing must declare a sign: X+ or X-", head.line,
                       head.col);
    } else {
      throw ParseError("unknown declaration '" + head.text + "'", head.line,
                       head.col);
    }
  }

  // Gather the port occurrences of every label, in declaration order.
  std::map<std::string, std::vector<PortUse>> uses;
  std::vector<std::string> label_order;
  for (size_t ci = 0; ci < xs.size(); ++ci) {
    for (int p = 0; p < 4; ++p) {
      const Token& t = xs[ci].labels[p];
      auto [it, fresh] = uses.try_emplace(t.text);
      if (fresh) label_order.push_back(t.text);
      it->second.push_back(PortUse{static_cast<int>(ci), p,
                                   port_is_incoming(p, xs[ci].sign), t});
    }
  }

  // Boundary labels: single-occurrence port labels plus all A endpoints.
  std::map<std::string, Token> boundary_tokens;
  std::vector<std::string> boundary_order;
  auto add_boundary = [&](const Token& t) {
    if (boundary_tokens.count(t.text))
      throw ParseError("boundary label '" + t.text + "' already used", t.line,
                       t.col);
    boundary_tokens.emplace(t.text, t);
    boundary_order.push_back(t.text);
  };
  for (const std::string& label : label_order) {
    const auto& occ = uses[label];
    if (occ.size() == 1) add_boundary(occ[0].tok);
    if (occ.size() > 2)
      throw ParseError("label '" + label + "' used at " +
                           std::to_string(occ.size()) +
                           " ports, at most 2 allowed",
                       occ[2].tok.line, occ[2].tok.col);
  }
  for (const auto& [p, q] : arcs) {
    if (uses.count(p.text))
      throw ParseError("boundary label '" + p.text + "' already used as edge",
                       p.line, p.col);
    if (uses.count(q.text))
      throw ParseError("boundary label '" + q.text + "' already used as edge",
                       q.line, q.col);
    add_boundary(p);
    add_boundary(q);
  }

  if (have_border) {
    if (border.size() != boundary_order.size())
      throw ParseError("boundary declaration lists " +
                           std::to_string(border.size()) + " labels, diagram has " +
                           std::to_string(boundary_order.size()),
                       border.empty() ? 1 : border[0].line,
                       border.empty() ? 1 : border[0].col);
    std::map<std::string, int> present;
    for (const std::string& s : boundary_order) present[s] = 1;
    std::vector<std::string> reordered;
    for (const Token& t : border) {
      auto it = present.find(t.text);
      if (it == present.end() || it->second == 0)
        throw ParseError("boundary declaration names unknown or repeated '" +
                             t.text + "'",
                         t.line, t.col);
      it->second = 0;
      reordered.push_back(t.text);
    }
    boundary_order = reordered;
  }

  TangleDiagram d;
  d.free_loops = loops;
  d.boundary = boundary_order;
  std::map<std::string, int> boundary_index;
  for (size_t b = 0; b < boundary_order.size(); ++b)
    boundary_index[boundary_order[b]] = static_cast<int>(b);

  d.crossings.resize(xs.size());
  for (size_t ci = 0; ci < xs.size(); ++ci) d.crossings[ci].sign = xs[ci].sign;

  // Edges come into being in declaration order: port labels first, at their
  // first occurrence, then the A arcs.
  std::map<std::string, int> edge_of_label;
  for (const std::string& label : label_order) {
    const auto& occ = uses[label];
    int eid = static_cast<int>(d.edges.size());
    edge_of_label[label] = eid;
    Edge e;
    if (occ.size() == 1) {
      EndRef at{occ[0].crossing, occ[0].port};
      EndRef bp = EndRef::boundary(boundary_index[label]);
      if (occ[0].incoming) {
        e.tail = bp;
        e.head = at;
      } else {
        e.tail = at;
        e.head = bp;
      }
    } else {
      const PortUse& a = occ[0];
      const PortUse& b = occ[1];
      if (a.incoming == b.incoming)
        throw ParseError("orientation inconsistency: edge '" + label +
                             "' is " + (a.incoming ? "incoming" : "outgoing") +
                             " at both ends",
                         b.tok.line, b.tok.col);
      const PortUse& in = a.incoming ? a : b;
      const PortUse& out = a.incoming ? b : a;
      e.tail = EndRef{out.crossing, out.port};
      e.head = EndRef{in.crossing, in.port};
    }
    d.edges.push_back(e);
    for (const PortUse& u : occ) d.crossings[u.crossing].ports[u.port] = eid;
  }
  for (const auto& [p, q] : arcs)
    d.edges.push_back(Edge{EndRef::boundary(boundary_index[p.text]),
                           EndRef::boundary(boundary_index[q.text])});

  validate(d);
  return d;
}

namespace {

void check_label_printable(const std::string& s) {
  bool bad = s.empty();
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') bad = true;
  if (bad)
    throw ValidationError("boundary label '" + s +
                          "' cannot be written in tangle notation");
}

}  // namespace

std::string serialize_diagram(const TangleDiagram& d) {
  for (const std::string& s : d.boundary) check_label_printable(s);

  // Internal edges get fresh names; pick a prefix no boundary label shadows.
  std::string prefix = "e";
  for (bool clash = true; clash;) {
    clash = false;
    for (const std::string& s : d.boundary) {
      if (s.size() > prefix.size() && s.compare(0, prefix.size(), prefix) == 0 &&
          std::isdigit(static_cast<unsigned char>(s[prefix.size()]))) {
        clash = true;
      }
    }
    if (clash) prefix += "e";
  }

  std::vector<std::string> name(d.edges.size());
  int counter = 0;
  auto edge_name = [&](int eid) -> const std::string& {
    if (name[eid].empty()) {
      const Edge& e = d.edges[eid];
      if (e.tail.at_boundary())
        name[eid] = d.boundary[e.tail.port];
      else if (e.head.at_boundary())
        name[eid] = d.boundary[e.head.port];
      else
        name[eid] = prefix + std::to_string(counter++);
    }
    return name[eid];
  };

  std::ostringstream out;
  for (const Crossing& c : d.crossings) {
    out << (c.sign > 0 ? "X+" : "X-");
    for (int p = 0; p < 4; ++p) out << ' ' << edge_name(c.ports[p]);
    out << '\n';
  }
  for (const Edge& e : d.edges)
    if (e.tail.at_boundary() && e.head.at_boundary())
      out << "A " << d.boundary[e.tail.port] << ' ' << d.boundary[e.head.port]
          << '\n';
  for (int i = 0; i < d.free_loops; ++i) out << "O\n";
  if (!d.boundary.empty()) {
    out << "B";
    for (const std::string& s : d.boundary) out << ' ' << s;
    out << '\n';
  }
  return out.str();
}

std::string diagram_to_json(const TangleDiagram& d) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["crossings"] = ordered_json::array();
  for (const Crossing& c : d.crossings) {
    ordered_json jc;
    jc["ports"] = c.ports;
    jc["sign"] = c.sign;
    j["crossings"].push_back(jc);
  }
  auto end_json = [&](const EndRef& e) {
    ordered_json je;
    if (e.at_boundary())
      je["boundary"] = d.boundary[e.port];
    else {
      je["crossing"] = e.crossing;
      je["port"] = e.port;
    }
    return je;
  };
  j["edges"] = ordered_json::array();
  for (const Edge& e : d.edges) {
    ordered_json je;
    je["tail"] = end_json(e.tail);
    je["head"] = end_json(e.head);
    j["edges"].push_back(je);
  }
  j["boundary"] = d.boundary;
  j["free_loops"] = d.free_loops;
  return j.dump(2);
}

TangleDiagram diagram_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), 1, 1);
  }
  TangleDiagram d;
  try {
    d.boundary = j.at("boundary").get<std::vector<std::string>>();
    d.free_loops = j.at("free_loops").get<int>();
    std::map<std::string, int> bidx;
    for (size_t b = 0; b < d.boundary.size(); ++b)
      bidx[d.boundary[b]] = static_cast<int>(b);
    auto end_from = [&](const nlohmann::json& je) {
      if (je.contains("boundary")) {
        auto it = bidx.find(je.at("boundary").get<std::string>());
        if (it == bidx.end())
          throw ValidationError("edge references unknown boundary label");
        return EndRef::boundary(it->second);
      }
      return EndRef{je.at("crossing").get<int>(), je.at("port").get<int>()};
    };
    for (const auto& je : j.at("edges"))
      d.edges.push_back(Edge{end_from(je.at("tail")), end_from(je.at("head"))});
    for (const auto& jc : j.at("crossings")) {
      Crossing c;
      auto ports = jc.at("ports").get<std::vector<int>>();
      if (ports.size() != 4) throw ValidationError("crossing needs 4 ports");
      for (int p = 0; p < 4; ++p) c.ports[p] = ports[p];
      c.sign = jc.at("sign").get<int>();
      d.crossings.push_back(c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what(), 1, 1);
  }
  validate(d);
  return d;
}

}  // namespace kht
