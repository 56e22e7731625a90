#include "cubix/json_io.hpp"

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cubix {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& j, const char* name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end()) bad(where, std::string("missing \"") + name + '"');
  return *it;
}

int int_field(const json& j, const char* name, const std::string& where) {
  const json& v = field(j, name, where);
  if (!v.is_number_integer())
    bad(where + "." + name, "expected an integer");
  return v.get<int>();
}

std::string dir_key(int i, Sign a) {
  return std::to_string(i) + ',' + sign_char(a);
}

std::string lvl_key(int k, int i) {
  return std::to_string(k) + ',' + std::to_string(i);
}

std::string lvl_dir_key(int k, int i, Sign a) {
  return lvl_key(k, i) + ',' + sign_char(a);
}

Cell parse_cell(const std::string& text, std::size_t bound,
                const std::string& where) {
  if (text.empty() || text.size() > 9 ||
      (text.size() > 1 && text[0] == '0'))
    bad(where, "bad cell index '" + text + "'");
  unsigned long v = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') bad(where, "bad cell index '" + text + "'");
    v = v * 10 + unsigned(ch - '0');
  }
  if (v >= bound)
    bad(where, "cell index " + text + " out of range (level has " +
                   std::to_string(bound) + " cells)");
  return Cell(v);
}

Cell cell_value(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    bad(where, "expected a cell index");
  long long x = v.get<long long>();
  if (x >= static_cast<long long>(bound))
    bad(where, "cell index " + std::to_string(x) + " out of range");
  return Cell(x);
}

// Reads one total entry map table[key] into out; entries are "src": dst.
void read_total(const json& table, const std::string& tname,
                const std::string& key, std::size_t domain,
                std::size_t codomain, std::vector<Cell>& out) {
  const std::string where = tname + "[\"" + key + "\"]";
  auto it = table.find(key);
  if (it == table.end()) bad(tname, "missing table \"" + key + "\"");
  if (!it->is_object()) bad(where, "expected an object");
  if (it->size() != domain)
    bad(where, "expected " + std::to_string(domain) + " entries, found " +
                   std::to_string(it->size()));
  for (const auto& [k, v] : it->items()) {
    Cell src = parse_cell(k, domain, where);
    out[src] = cell_value(v, codomain, where + "[" + k + "]");
  }
}

// Reads one partial pair table[key]; entries are "x|y": z.
template <class Set>
void read_pairs(const json& table, const std::string& tname,
                const std::string& key, std::size_t count, Set&& set) {
  const std::string where = tname + "[\"" + key + "\"]";
  auto it = table.find(key);
  if (it == table.end()) bad(tname, "missing table \"" + key + "\"");
  if (!it->is_object()) bad(where, "expected an object");
  for (const auto& [k, v] : it->items()) {
    std::size_t bar = k.find('|');
    if (bar == std::string::npos || k.find('|', bar + 1) != std::string::npos)
      bad(where, "bad pair key '" + k + "'");
    Cell x = parse_cell(k.substr(0, bar), count, where);
    Cell y = parse_cell(k.substr(bar + 1), count, where);
    Cell z = cell_value(v, count, where + "[\"" + k + "\"]");
    set(x, y, z);
  }
}

const json& object_field(const json& j, const char* name,
                         const std::string& where) {
  const json& v = field(j, name, where);
  if (!v.is_object()) bad(where + "." + name, "expected an object");
  return v;
}

SingleSetStructure read_single(const json& j, const std::string& doc) {
  int dim = int_field(j, "dim", doc);
  if (dim < 1 || dim > 19) bad(doc + ".dim", "dimension must be in 1..19");
  const json& cells = field(j, "cells", doc);
  if (!cells.is_array() || cells.empty())
    bad(doc + ".cells", "expected a nonempty array of names");
  for (const auto& c : cells)
    if (!c.is_string()) bad(doc + ".cells", "names must be strings");
  const std::size_t count = cells.size();

  bool with_conn = j.contains("conn");
  if (with_conn && dim < 2)
    bad(doc + ".conn", "connection tables need dim >= 2");

  SingleSetStructure s;
  s.init_tables(dim, count, with_conn);
  s.names = cells.get<std::vector<std::string>>();

  const json& face = object_field(j, "face", doc);
  for (int i = 1; i <= dim; ++i)
    for (Sign a : {Sign::minus, Sign::plus})
      read_total(face, doc + ".face", dir_key(i, a), count, count,
                 s.face_[i - 1][sign_index(a)]);

  if (dim >= 2) {
    const json& sym = object_field(j, "sym", doc);
    const json& inv = object_field(j, "inv_sym", doc);
    for (int i = 1; i <= dim - 1; ++i) {
      read_total(sym, doc + ".sym", std::to_string(i), count, count,
                 s.sym_[i - 1]);
      read_total(inv, doc + ".inv_sym", std::to_string(i), count, count,
                 s.inv_sym_[i - 1]);
    }
    if (with_conn) {
      const json& conn = object_field(j, "conn", doc);
      for (int i = 1; i <= dim - 1; ++i)
        for (Sign a : {Sign::minus, Sign::plus})
          read_total(conn, doc + ".conn", dir_key(i, a), count, count,
                     s.conn_[i - 1][sign_index(a)]);
    }
  }

  const json& comp = object_field(j, "comp", doc);
  for (int i = 1; i <= dim; ++i)
    read_pairs(comp, doc + ".comp", std::to_string(i), count,
               [&](Cell x, Cell y, Cell z) { s.set_comp(i, x, y, z); });
  s.seal();
  return s;
}

ClassicalStructure read_classical(const json& j, const std::string& doc) {
  int dim = int_field(j, "dim", doc);
  if (dim < 1 || dim > 19) bad(doc + ".dim", "dimension must be in 1..19");
  const json& cells = field(j, "cells", doc);
  if (!cells.is_array() || cells.size() != std::size_t(dim) + 1)
    bad(doc + ".cells", "expected one name list per level 0.." +
                            std::to_string(dim));
  std::vector<std::size_t> counts;
  for (const auto& lvl : cells) {
    if (!lvl.is_array() || lvl.empty())
      bad(doc + ".cells", "each level needs a nonempty array of names");
    for (const auto& c : lvl)
      if (!c.is_string()) bad(doc + ".cells", "names must be strings");
    counts.push_back(lvl.size());
  }

  bool with_conn = j.contains("cconn");
  if (with_conn && dim < 2)
    bad(doc + ".cconn", "connection tables need dim >= 2");

  ClassicalStructure c;
  c.init_levels(dim, counts, with_conn);
  for (int k = 0; k <= dim; ++k)
    c.names[std::size_t(k)] =
        cells[std::size_t(k)].get<std::vector<std::string>>();

  const json& cface = object_field(j, "cface", doc);
  const json& deg = object_field(j, "deg", doc);
  for (int k = 1; k <= dim; ++k)
    for (int i = 1; i <= k; ++i) {
      for (Sign a : {Sign::minus, Sign::plus})
        read_total(cface, doc + ".cface", lvl_dir_key(k, i, a), counts[k],
                   counts[k - 1], c.cface[std::size_t(k)][i - 1][sign_index(a)]);
      read_total(deg, doc + ".deg", lvl_key(k, i), counts[k - 1], counts[k],
                 c.deg[std::size_t(k)][i - 1]);
      // hard invariant: the graded carrier only makes sense with injective
      // degeneracies, so this is a load failure rather than a report item
      std::vector<Cell> pre(counts[k], no_cell);
      for (Cell x = 0; x < counts[k - 1]; ++x) {
        Cell v = c.deg[std::size_t(k)][i - 1][x];
        if (pre[v] != no_cell)
          bad(doc + ".deg[\"" + lvl_key(k, i) + "\"]",
              "not injective: cells " + std::to_string(pre[v]) + " and " +
                  std::to_string(x) + " share image " + std::to_string(v));
        pre[v] = x;
      }
    }

  if (with_conn) {
    const json& cconn = object_field(j, "cconn", doc);
    for (int k = 2; k <= dim; ++k)
      for (int i = 1; i <= k - 1; ++i)
        for (Sign a : {Sign::minus, Sign::plus})
          read_total(cconn, doc + ".cconn", lvl_dir_key(k, i, a),
                     counts[k - 1], counts[k],
                     c.cconn[std::size_t(k)][i - 1][sign_index(a)]);
  }

  const json& ccomp = object_field(j, "ccomp", doc);
  for (int k = 1; k <= dim; ++k)
    for (int i = 1; i <= k; ++i)
      read_pairs(ccomp, doc + ".ccomp", lvl_key(k, i), counts[k],
                 [&](Cell x, Cell y, Cell z) {
                   c.set_comp(i, {k, x}, {k, y}, {k, z});
                 });
  c.seal();
  return c;
}

json write_single(const SingleSetStructure& s) {
  json j;
  j["kind"] = "single-set";
  j["dim"] = s.dim;
  j["cells"] = s.names;
  json face = json::object();
  for (int i = 1; i <= s.dim; ++i)
    for (Sign a : {Sign::minus, Sign::plus}) {
      json ent = json::object();
      for (Cell x = 0; x < s.size(); ++x)
        ent[std::to_string(x)] = s.face_[i - 1][sign_index(a)][x];
      face[dir_key(i, a)] = std::move(ent);
    }
  j["face"] = std::move(face);
  json sym = json::object(), inv = json::object();
  for (int i = 1; i <= s.dim - 1; ++i) {
    json se = json::object(), ie = json::object();
    for (Cell x = 0; x < s.size(); ++x) {
      se[std::to_string(x)] = s.sym_[i - 1][x];
      ie[std::to_string(x)] = s.inv_sym_[i - 1][x];
    }
    sym[std::to_string(i)] = std::move(se);
    inv[std::to_string(i)] = std::move(ie);
  }
  j["sym"] = std::move(sym);
  j["inv_sym"] = std::move(inv);
  if (s.has_connections()) {
    json conn = json::object();
    for (int i = 1; i <= s.dim - 1; ++i)
      for (Sign a : {Sign::minus, Sign::plus}) {
        json ent = json::object();
        for (Cell x = 0; x < s.size(); ++x)
          ent[std::to_string(x)] = s.conn_[i - 1][sign_index(a)][x];
        conn[dir_key(i, a)] = std::move(ent);
      }
    j["conn"] = std::move(conn);
  }
  json comp = json::object();
  for (int i = 1; i <= s.dim; ++i) {
    json ent = json::object();
    for (const auto& [x, y] : s.comp_[i - 1].pairs)
      ent[std::to_string(x) + "|" + std::to_string(y)] =
          s.comp_[i - 1].map.at(pair_key(x, y));
    comp[std::to_string(i)] = std::move(ent);
  }
  j["comp"] = std::move(comp);
  return j;
}

json write_classical(const ClassicalStructure& c) {
  json j;
  j["kind"] = "classical";
  j["dim"] = c.dim;
  json cells = json::array();
  for (int k = 0; k <= c.dim; ++k) cells.push_back(c.names[std::size_t(k)]);
  j["cells"] = std::move(cells);
  json cface = json::object(), deg = json::object();
  for (int k = 1; k <= c.dim; ++k)
    for (int i = 1; i <= k; ++i) {
      for (Sign a : {Sign::minus, Sign::plus}) {
        json ent = json::object();
        for (Cell x = 0; x < c.size(k); ++x)
          ent[std::to_string(x)] = c.cface[std::size_t(k)][i - 1][sign_index(a)][x];
        cface[lvl_dir_key(k, i, a)] = std::move(ent);
      }
      json ent = json::object();
      for (Cell x = 0; x < c.size(k - 1); ++x)
        ent[std::to_string(x)] = c.deg[std::size_t(k)][i - 1][x];
      deg[lvl_key(k, i)] = std::move(ent);
    }
  j["cface"] = std::move(cface);
  j["deg"] = std::move(deg);
  if (c.has_connections()) {
    json cconn = json::object();
    for (int k = 2; k <= c.dim; ++k)
      for (int i = 1; i <= k - 1; ++i)
        for (Sign a : {Sign::minus, Sign::plus}) {
          json ent = json::object();
          for (Cell x = 0; x < c.size(k - 1); ++x)
            ent[std::to_string(x)] =
                c.cconn[std::size_t(k)][i - 1][sign_index(a)][x];
          cconn[lvl_dir_key(k, i, a)] = std::move(ent);
        }
    j["cconn"] = std::move(cconn);
  }
  json ccomp = json::object();
  for (int k = 1; k <= c.dim; ++k)
    for (int i = 1; i <= k; ++i) {
      json ent = json::object();
      for (const auto& [x, y] : c.ccomp[std::size_t(k)][i - 1].pairs)
        ent[std::to_string(x) + "|" + std::to_string(y)] =
            c.ccomp[std::size_t(k)][i - 1].map.at(pair_key(x, y));
      ccomp[lvl_key(k, i)] = std::move(ent);
    }
  j["ccomp"] = std::move(ccomp);
  return j;
}

}  // namespace

SingleSetStructure& StructureDocument::single_set() {
  if (auto* s = std::get_if<SingleSetStructure>(&value)) return *s;
  throw StructureError(StructureError::Kind::domain,
                       "document holds a classical structure");
}
const SingleSetStructure& StructureDocument::single_set() const {
  return const_cast<StructureDocument*>(this)->single_set();
}
ClassicalStructure& StructureDocument::classical() {
  if (auto* c = std::get_if<ClassicalStructure>(&value)) return *c;
  throw StructureError(StructureError::Kind::domain,
                       "document holds a single-set structure");
}
const ClassicalStructure& StructureDocument::classical() const {
  return const_cast<StructureDocument*>(this)->classical();
}

StructureDocument from_json(const nlohmann::json& j) {
  const std::string doc = "document";
  if (!j.is_object()) bad(doc, "expected a JSON object");
  int ver = int_field(j, "format_version", doc);
  if (ver != format_version)
    bad(doc + ".format_version",
        "unsupported version " + std::to_string(ver));
  const json& kind = field(j, "kind", doc);
  if (!kind.is_string()) bad(doc + ".kind", "expected a string");

  StructureDocument out;
  if (j.contains("meta")) {
    const json& m = j["meta"];
    if (!m.is_object()) bad(doc + ".meta", "expected an object");
    out.meta = m;
  }
  const bool validated = out.meta.value("validated", false);

  if (kind == "single-set") {
    SingleSetStructure s = read_single(j, doc);
    s.validated = validated;
    out.value = std::move(s);
  } else if (kind == "classical") {
    ClassicalStructure c = read_classical(j, doc);
    c.validated = validated;
    out.value = std::move(c);
  } else {
    bad(doc + ".kind", "expected \"single-set\" or \"classical\"");
  }
  return out;
}

nlohmann::json to_json(const StructureDocument& doc) {
  json j = doc.is_single_set() ? write_single(doc.single_set())
                               : write_classical(doc.classical());
  j["format_version"] = format_version;
  json meta = doc.meta;
  meta["validated"] = doc.is_single_set() ? doc.single_set().validated
                                          : doc.classical().validated;
  j["meta"] = std::move(meta);
  return j;
}

StructureDocument parse_document(const std::string& text,
                                 const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  try {
    return from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

StructureDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path);
}

std::string dump_document(const StructureDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

void save_document(const StructureDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructureError(StructureError::Kind::config,
                                 "cannot write " + path);
  out << dump_document(doc);
}

}  // namespace cubix
