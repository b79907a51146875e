#include "hd/diagram_io.hpp"

#include <sstream>
#include <vector>

namespace hd {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

int parse_int(const std::string& s, int line_no) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) fail(line_no, "bad integer '" + s + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    fail(line_no, "bad integer '" + s + "'");
  }
}

}  // namespace

HeegaardDiagram parse_diagram(std::string_view text) {
  HeegaardDiagram dg;
  bool saw_header = false;
  int last_region = -1;

  // pending references, resolved after all ids are known
  struct PendingArc { std::string curve, tail_v, head_v; int tail_slot, head_slot; int line; };
  struct PendingStep { std::string arc; bool forward; };
  struct PendingCorner { std::string vertex; int quadrant; };
  std::vector<PendingArc> pending_arcs;
  std::vector<std::vector<PendingStep>> pending_cycles;   // parallel to region cycles
  std::vector<std::vector<PendingCorner>> pending_corners;
  std::vector<std::pair<std::string, int>> pending_basepoints;  // (region id, line)
  std::vector<int> cycle_lines, arc_region_of_cycle;

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "heegaard-diagram") {
      if (toks.size() != 2 || toks[1] != "v1") fail(line_no, "expected 'heegaard-diagram v1'");
      saw_header = true;
    } else if (!saw_header) {
      fail(line_no, "file must start with 'heegaard-diagram v1'");
    } else if (kw == "genus") {
      if (toks.size() != 2) fail(line_no, "genus <g>");
      dg.genus = parse_int(toks[1], line_no);
    } else if (kw == "families") {
      if (toks.size() != 2) fail(line_no, "families <n>");
      dg.family_count = parse_int(toks[1], line_no);
    } else if (kw == "curves-per-family") {
      if (toks.size() != 2) fail(line_no, "curves-per-family <k>");
      dg.curves_per_family = parse_int(toks[1], line_no);
    } else if (kw == "curve") {
      if (toks.size() != 4 || toks[2] != "family") fail(line_no, "curve <id> family <i>");
      if (dg.curve_by_id.count(toks[1])) fail(line_no, "duplicate curve '" + toks[1] + "'");
      dg.curve_by_id[toks[1]] = (int)dg.curves.size();
      dg.curves.push_back({toks[1], parse_int(toks[3], line_no)});
    } else if (kw == "vertex") {
      if (toks.size() != 5 || toks[2] != "pair") fail(line_no, "vertex <id> pair <i> <j>");
      if (dg.vertex_by_id.count(toks[1])) fail(line_no, "duplicate vertex '" + toks[1] + "'");
      dg.vertex_by_id[toks[1]] = (int)dg.vertices.size();
      Vertex v;
      v.id = toks[1];
      v.fam_first = parse_int(toks[3], line_no);
      v.fam_second = parse_int(toks[4], line_no);
      dg.vertices.push_back(std::move(v));
    } else if (kw == "arc") {
      if (toks.size() != 10 || toks[2] != "curve" || toks[4] != "tail" || toks[7] != "head")
        fail(line_no, "arc <id> curve <c> tail <v> <slot> head <v> <slot>");
      if (dg.arc_by_id.count(toks[1])) fail(line_no, "duplicate arc '" + toks[1] + "'");
      dg.arc_by_id[toks[1]] = (int)dg.arcs.size();
      Arc a;
      a.id = toks[1];
      dg.arcs.push_back(a);
      pending_arcs.push_back({toks[3], toks[5], toks[8], parse_int(toks[6], line_no),
                              parse_int(toks[9], line_no), line_no});
    } else if (kw == "region") {
      if (toks.size() != 4 || toks[2] != "chi") fail(line_no, "region <id> chi <n>");
      if (dg.region_by_id.count(toks[1])) fail(line_no, "duplicate region '" + toks[1] + "'");
      dg.region_by_id[toks[1]] = (int)dg.regions.size();
      Region r;
      r.id = toks[1];
      r.chi = parse_int(toks[3], line_no);
      dg.regions.push_back(std::move(r));
      last_region = (int)dg.regions.size() - 1;
      pending_corners.resize(dg.regions.size());
    } else if (kw == "cycle") {
      if (last_region < 0) fail(line_no, "cycle before any region");
      if (toks.size() < 2) fail(line_no, "cycle needs at least one arc");
      std::vector<PendingStep> cyc;
      for (size_t i = 1; i < toks.size(); ++i) {
        std::string ref = toks[i];
        char dir = ref.back();
        if (dir != '+' && dir != '-') fail(line_no, "arc reference '" + ref + "' must end in + or -");
        ref.pop_back();
        cyc.push_back({ref, dir == '+'});
      }
      pending_cycles.push_back(std::move(cyc));
      cycle_lines.push_back(line_no);
      arc_region_of_cycle.push_back(last_region);
    } else if (kw == "corners") {
      if (last_region < 0) fail(line_no, "corners before any region");
      for (size_t i = 1; i < toks.size(); ++i) {
        auto colon = toks[i].find(':');
        if (colon == std::string::npos) fail(line_no, "corner '" + toks[i] + "' must be vertex:quadrant");
        pending_corners[last_region].push_back(
            {toks[i].substr(0, colon), parse_int(toks[i].substr(colon + 1), line_no)});
      }
    } else if (kw == "basepoint") {
      if (toks.size() != 3) fail(line_no, "basepoint <label> <region>");
      dg.basepoints.push_back({toks[1], -1});
      pending_basepoints.push_back({toks[2], line_no});
    } else {
      fail(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (!saw_header) throw ParseError("empty input: expected 'heegaard-diagram v1'");

  // resolve references
  for (size_t i = 0; i < pending_arcs.size(); ++i) {
    const PendingArc& p = pending_arcs[i];
    Arc& a = dg.arcs[i];
    auto c = dg.curve_by_id.find(p.curve);
    if (c == dg.curve_by_id.end()) fail(p.line, "arc '" + a.id + "' references unknown curve '" + p.curve + "'");
    a.curve = c->second;
    auto tv = dg.vertex_by_id.find(p.tail_v);
    if (tv == dg.vertex_by_id.end()) fail(p.line, "arc '" + a.id + "' references unknown vertex '" + p.tail_v + "'");
    auto hv = dg.vertex_by_id.find(p.head_v);
    if (hv == dg.vertex_by_id.end()) fail(p.line, "arc '" + a.id + "' references unknown vertex '" + p.head_v + "'");
    a.tail_vertex = tv->second;
    a.tail_slot = p.tail_slot;
    a.head_vertex = hv->second;
    a.head_slot = p.head_slot;
  }
  for (size_t ci = 0; ci < pending_cycles.size(); ++ci) {
    std::vector<RegionCycleStep> cyc;
    for (const PendingStep& st : pending_cycles[ci]) {
      auto it = dg.arc_by_id.find(st.arc);
      if (it == dg.arc_by_id.end())
        fail(cycle_lines[ci], "cycle references unknown arc '" + st.arc + "'");
      cyc.push_back({it->second, st.forward});
    }
    dg.regions[arc_region_of_cycle[ci]].cycles.push_back(std::move(cyc));
  }
  for (size_t ri = 0; ri < pending_corners.size(); ++ri)
    for (const PendingCorner& pc : pending_corners[ri]) {
      auto it = dg.vertex_by_id.find(pc.vertex);
      if (it == dg.vertex_by_id.end())
        throw ParseError("region '" + dg.regions[ri].id + "' corner references unknown vertex '" +
                         pc.vertex + "'");
      dg.regions[ri].corners.push_back({it->second, pc.quadrant});
    }
  for (size_t bi = 0; bi < pending_basepoints.size(); ++bi) {
    auto it = dg.region_by_id.find(pending_basepoints[bi].first);
    if (it == dg.region_by_id.end())
      fail(pending_basepoints[bi].second,
           "basepoint references unknown region '" + pending_basepoints[bi].first + "'");
    dg.basepoints[bi].region = it->second;
  }

  ValidationReport rep = validate(dg);
  if (!rep.ok()) throw ParseError("diagram fails validation:\n" + rep.str());
  return dg;
}

std::string emit_diagram(const HeegaardDiagram& dg) {
  std::ostringstream os;
  os << "heegaard-diagram v1\n";
  os << "genus " << dg.genus << "\n";
  os << "families " << dg.family_count << "\n";
  os << "curves-per-family " << dg.curves_per_family << "\n";
  for (const Curve& c : dg.curves) os << "curve " << c.id << " family " << c.family << "\n";
  for (const Vertex& v : dg.vertices)
    os << "vertex " << v.id << " pair " << v.fam_first << " " << v.fam_second << "\n";
  for (const Arc& a : dg.arcs)
    os << "arc " << a.id << " curve " << dg.curves[a.curve].id << " tail "
       << dg.vertices[a.tail_vertex].id << " " << a.tail_slot << " head "
       << dg.vertices[a.head_vertex].id << " " << a.head_slot << "\n";
  for (const Region& r : dg.regions) {
    os << "region " << r.id << " chi " << r.chi << "\n";
    for (const auto& cyc : r.cycles) {
      os << "cycle";
      for (const RegionCycleStep& st : cyc)
        os << " " << dg.arcs[st.arc].id << (st.forward ? "+" : "-");
      os << "\n";
    }
    if (!r.corners.empty()) {
      os << "corners";
      for (auto [v, q] : r.corners) os << " " << dg.vertices[v].id << ":" << q;
      os << "\n";
    }
  }
  for (const Basepoint& b : dg.basepoints)
    os << "basepoint " << b.label << " " << dg.regions[b.region].id << "\n";
  return os.str();
}

HeegaardDiagram load_fixture(const std::string& name) {
  const auto& all = bundled_fixtures();
  auto it = all.find(name);
  if (it == all.end()) throw std::invalid_argument("unknown fixture '" + name + "'");
  return parse_diagram(it->second);
}

}  // namespace hd
