#include "kkpath/json_io.hpp"

namespace kkpath {

json cartan_to_json(const CartanMatrix& a) {
  json rows = json::array();
  for (int r = 0; r < a.rank(); ++r) {
    json row = json::array();
    for (int c = 0; c < a.rank(); ++c) row.push_back(a.entry(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

CartanMatrix cartan_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw invalid_input("Cartan matrix JSON must be a nonempty array of arrays");
  int n = static_cast<int>(j.size());
  IntMat a(n, n);
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != n)
      throw invalid_input("Cartan matrix JSON must be square");
    for (int c = 0; c < n; ++c) a(r, c) = j[r][c].get<Int>();
  }
  return CartanMatrix(a);
}

json weight_to_json(const IntVec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

IntVec weight_from_json(const json& j) {
  IntVec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = j[i].get<Int>();
  return v;
}

json path_to_json(const PLPath& p) {
  json out = json::array();
  for (const RatVec& v : p.vertices()) {
    json vertex = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) vertex.push_back(v(i).str());
    out.push_back(std::move(vertex));
  }
  return out;
}

PLPath path_from_json(const json& j) {
  std::vector<RatVec> vertices;
  for (const json& vtx : j) {
    RatVec v(vtx.size());
    for (std::size_t i = 0; i < vtx.size(); ++i) {
      const json& c = vtx[i];
      v(static_cast<Eigen::Index>(i)) =
          c.is_string() ? Rational::parse(c.get<std::string>())
                        : Rational(c.get<Int>());
    }
    vertices.push_back(std::move(v));
  }
  return PLPath(std::move(vertices));
}

json decomposition_to_json(const Decomposition& d) {
  json out = json::array();
  for (const auto& [w, m] : d.parts)
    out.push_back(json{{"weight", weight_to_json(w)}, {"mult", m}});
  return out;
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  for (const json& item : j)
    d.add(weight_from_json(item.at("weight")), item.at("mult").get<Int>());
  return d;
}

json character_to_json(const FormalCharacter& ch) {
  json out = json::array();
  for (const auto& [w, c] : ch.terms())
    out.push_back(json{{"weight", weight_to_json(w)}, {"mult", c}});
  return out;
}

json kk_index_to_json(const WeylGroup& g, const KKIndex& idx) {
  return json{{"cartan", cartan_to_json(g.cartan())},
              {"lambda", weight_to_json(idx.lambda)},
              {"w", word_to_string(g.word(idx.w))},
              {"mu", weight_to_json(idx.mu)}};
}

LoadedKKIndex kk_index_from_json(const json& j, std::size_t orbit_cap) {
  LoadedKKIndex out;
  out.group = std::make_shared<WeylGroup>(cartan_from_json(j.at("cartan")),
                                          orbit_cap);
  out.index = make_kk_index(
      *out.group, weight_from_json(j.at("lambda")),
      out.group->from_word(parse_word(j.at("w").get<std::string>())),
      weight_from_json(j.at("mu")));
  return out;
}

json ssyt_to_json(const SSYT& s) {
  json out = json::array();
  for (const auto& row : s.rows) out.push_back(row);
  return out;
}

SSYT ssyt_from_json(const json& j) {
  SSYT s;
  for (const json& row : j) s.rows.push_back(row.get<std::vector<int>>());
  if (!s.valid()) throw invalid_input("rows do not form a semistandard tableau");
  return s;
}

json concat_to_json(const ConcatPath& p) {
  json shapes = json::array();
  json pieces = json::array();
  for (const LSPath& piece : p.pieces()) {
    shapes.push_back(weight_to_json(piece.shape()));
    pieces.push_back(path_to_json(piece.path()));
  }
  return json{{"shapes", std::move(shapes)}, {"pieces", std::move(pieces)}};
}

ConcatPath concat_from_json(const WeylGroup& g, const json& j) {
  const json& shapes = j.at("shapes");
  const json& pieces = j.at("pieces");
  if (shapes.size() != pieces.size())
    throw invalid_input("shapes and pieces must align");
  std::vector<LSPath> out;
  for (std::size_t k = 0; k < shapes.size(); ++k)
    out.emplace_back(g, path_from_json(pieces[k]),
                     weight_from_json(shapes[k]));
  return ConcatPath(g, std::move(out));
}

}  // namespace kkpath
