#include "pfq/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pfq/errors.hpp"

namespace pfq {

using nlohmann::json;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

std::string strip_comments(const std::string &text) {
  std::ostringstream out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    out << line << '\n';
  }
  return out.str();
}

bool looks_like_json(const std::string &text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

json parse_json(const std::string &text, const char *what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ParseError(std::string("malformed ") + what + " object");
  return j;
}

std::vector<std::vector<int>> json_int_table(const json &j, const char *key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(std::string("missing table field '") + key + "'");
  std::vector<std::vector<int>> out;
  for (const auto &row : j[key]) {
    if (!row.is_array()) throw ParseError("table rows must be arrays");
    std::vector<int> r;
    for (const auto &v : row) {
      if (!v.is_number_integer()) throw ParseError("table entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace

FiniteQuandle parse_quandle(const std::string &text, ExecMode mode) {
  if (looks_like_json(text)) {
    json j = parse_json(text, "quandle");
    auto table = json_int_table(j, "op");
    if (j.contains("n") && j["n"].get<int>() != static_cast<int>(table.size()))
      throw ParseError("declared size does not match the table");
    return FiniteQuandle::validate(table, mode);
  }
  std::istringstream in(strip_comments(text));
  std::string word;
  if (!(in >> word) || word != "quandle")
    throw ParseError("expected header 'quandle <n>'");
  int n = -1;
  if (!(in >> n) || n < 0) throw ParseError("bad carrier size in header");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (long i = 0; i < static_cast<long>(n) * n; ++i) {
    int v;
    if (!(in >> v)) throw ParseError("table ends early");
    flat.push_back(v);
  }
  int extra;
  if (in >> extra) throw ParseError("trailing entries after the table");
  return FiniteQuandle::validate_flat(std::move(flat), n, mode);
}

FiniteQuandle load_quandle(const std::string &path, ExecMode mode) {
  return parse_quandle(read_file(path), mode);
}

std::string to_qnd(const FiniteQuandle &q) {
  std::ostringstream out;
  out << "quandle " << q.size() << '\n';
  for (int x = 0; x < q.size(); ++x) {
    for (int y = 0; y < q.size(); ++y) {
      if (y) out << ' ';
      out << q.op(x, y);
    }
    out << '\n';
  }
  return out.str();
}

std::string quandle_json(const FiniteQuandle &q) {
  json j;
  j["n"] = q.size();
  j["op"] = q.rows();
  return j.dump();
}

namespace {

PermGroup perm_group_from_json(const json &j, long order_bound) {
  if (j.contains("mul")) {
    auto table = json_int_table(j, "mul");
    FiniteGroup g = FiniteGroup::validate(table);
    if (j.contains("id") && j["id"].get<int>() != g.id())
      throw ParseError("declared identity disagrees with the table");
    if (j.contains("n") && j["n"].get<int>() != g.order())
      throw ParseError("declared order disagrees with the table");
    return regular_representation(g);
  }
  if (!j.contains("degree") || !j.contains("generators"))
    throw ParseError("group object needs either 'mul' or 'degree'+'generators'");
  const int degree = j["degree"].get<int>();
  std::vector<Permutation> gens;
  for (const auto &g : j["generators"])
    gens.push_back(Permutation::from_cycles(g.get<std::string>(), degree));
  return PermGroup::generate(std::move(gens), degree, order_bound);
}

} // namespace

PermGroup parse_perm_group(const std::string &text, long order_bound) {
  return perm_group_from_json(parse_json(text, "group"), order_bound);
}

PermGroup load_perm_group(const std::string &path, long order_bound) {
  return parse_perm_group(read_file(path), order_bound);
}

FiniteGroup parse_finite_group(const std::string &text) {
  json j = parse_json(text, "group");
  if (j.contains("mul")) return FiniteGroup::validate(json_int_table(j, "mul"));
  return to_cayley(perm_group_from_json(j, kDefaultOrderBound));
}

IntMatrix parse_matrix(const std::string &text) {
  json j = parse_json(text, "matrix");
  auto rows = json_int_table(j, "entries");
  if (j.contains("rows") && j["rows"].get<int>() != static_cast<int>(rows.size()))
    throw ParseError("declared row count disagrees with entries");
  if (!rows.empty() && j.contains("cols") &&
      j["cols"].get<int>() != static_cast<int>(rows[0].size()))
    throw ParseError("declared column count disagrees with entries");
  std::vector<std::vector<long long>> ll;
  for (auto &r : rows) ll.emplace_back(r.begin(), r.end());
  return IntMatrix::from_rows(ll);
}

QuandleTower parse_tower(const std::string &text, const std::string &base_dir,
                         long order_bound) {
  json j = parse_json(text, "tower descriptor");
  if (!j.contains("builder")) throw ParseError("descriptor needs 'builder'");
  const std::string builder = j["builder"].get<std::string>();
  auto need_int = [&](const char *key) {
    if (!j.contains(key) || !j[key].is_number_integer())
      throw ParseError(std::string("descriptor needs integer '") + key + "'");
    return j[key].get<int>();
  };
  if (builder == "tak_zp")
    return tak_tower(zp_group_tower(need_int("p"), need_int("depth")));
  if (builder == "conj") {
    const int n = need_int("sym");
    return constant_tower(conj_quandle(symmetric_group_table(n)),
                          need_int("depth"));
  }
  if (builder == "m_product") return m_product_tower(need_int("depth"));
  if (builder == "coset") {
    const int n = need_int("sym");
    const int depth = need_int("depth");
    PermGroup g = PermGroup::generate(transpositions_of(n), n, order_bound);
    std::vector<Permutation> sub_gens;
    if (!j.contains("subgroup") || !j["subgroup"].is_array())
      throw ParseError("coset descriptor needs 'subgroup' cycle list");
    for (const auto &s : j["subgroup"])
      sub_gens.push_back(Permutation::from_cycles(s.get<std::string>(), n));
    PermGroup h = PermGroup::generate(std::move(sub_gens), n, order_bound);
    Permutation hc = Permutation::from_cycles(j["h"].get<std::string>(), n);
    GroupTower gt;
    std::vector<int> id_map(static_cast<size_t>(g.order()));
    for (long i = 0; i < g.order(); ++i) id_map[static_cast<size_t>(i)] = static_cast<int>(i);
    for (int k = 0; k < depth; ++k) gt.levels.push_back(g);
    for (int k = 0; k + 1 < depth; ++k) gt.transitions.push_back(id_map);
    return coset_tower(gt, std::vector<PermGroup>(static_cast<size_t>(depth), h),
                       std::vector<Permutation>(static_cast<size_t>(depth), hc));
  }
  if (builder == "explicit") {
    QuandleTower t;
    if (!j.contains("levels") || !j["levels"].is_array())
      throw ParseError("explicit descriptor needs 'levels'");
    for (const auto &lvl : j["levels"]) {
      if (lvl.is_string()) {
        std::filesystem::path p = lvl.get<std::string>();
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        t.levels.push_back(load_quandle(p.string()));
      } else {
        t.levels.push_back(FiniteQuandle::validate(json_int_table(lvl, "op")));
      }
    }
    if (!j.contains("transitions") || !j["transitions"].is_array())
      throw ParseError("explicit descriptor needs 'transitions'");
    for (const auto &tr : j["transitions"]) {
      std::vector<int> map;
      for (const auto &v : tr) map.push_back(v.get<int>());
      t.transitions.push_back(std::move(map));
    }
    validate_tower(t);
    return t;
  }
  throw ParseError("unknown builder '" + builder + "'");
}

QuandleTower load_tower(const std::string &path, long order_bound) {
  return parse_tower(read_file(path),
                     std::filesystem::path(path).parent_path().string(),
                     order_bound);
}

} // namespace pfq
