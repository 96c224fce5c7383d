#include "levikit/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "levikit/error.hpp"

namespace levikit::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) bad(std::string("expected an object holding '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

size_t index_of(const Json& j, size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a non-negative integer");
  auto v = j.get<unsigned long long>();
  if (v >= bound) bad(std::string(what) + " " + std::to_string(v) + " out of range");
  return static_cast<size_t>(v);
}

size_t dim_of(const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 0) bad("'dim' must be a non-negative integer");
  return d.get<size_t>();
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string("'") + what + "' must be an array");
  return j;
}

std::vector<std::string> labels_of(const Json& j) {
  std::vector<std::string> out;
  if (!j.contains("labels")) return out;
  for (const auto& l : array_of(j.at("labels"), "labels")) {
    if (!l.is_string()) bad("labels must be strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

// [[a, b, c, value], ...] into a dense m^3 tensor.
std::vector<Rational> triples_from_json(const Json& j, const char* what, size_t a, size_t b, size_t c) {
  std::vector<Rational> out(a * b * c);
  for (const auto& t : array_of(j, what)) {
    if (!t.is_array() || t.size() != 4) bad(std::string("entries of '") + what + "' must be [i, j, k, value]");
    size_t x = index_of(t[0], a, what), y = index_of(t[1], b, what), z = index_of(t[2], c, what);
    out[(x * b + y) * c + z] += rational_from_json(t[3]);
  }
  return out;
}

Json triples_to_json(const std::vector<Rational>& tensor, size_t a, size_t b, size_t c) {
  Json out = Json::array();
  for (size_t x = 0; x < a; ++x)
    for (size_t y = 0; y < b; ++y)
      for (size_t z = 0; z < c; ++z) {
        const Rational& v = tensor[(x * b + y) * c + z];
        if (v != 0) out.push_back(Json::array({x, y, z, rational_to_json(v)}));
      }
  return out;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad("'" + path.string() + "': " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write to '" + path.string() + "' failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rationals must be strings \"p/q\" or integers");
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (size_t i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v[i]));
  return out;
}

Vector vector_from_json(const Json& j, size_t expected) {
  if (!j.is_array() || j.size() != expected) bad("expected a vector of length " + std::to_string(expected));
  Vector v(expected);
  for (size_t i = 0; i < expected; ++i) v[i] = rational_from_json(j[i]);
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const Json& j, size_t rows, size_t cols) {
  if (!j.is_array() || j.size() != rows) bad("expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    Vector r = vector_from_json(j[i], cols);
    for (size_t c = 0; c < cols; ++c) m(i, c) = r[c];
  }
  return m;
}

Json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

Subspace subspace_from_json(const Json& j, size_t ambient) {
  std::vector<Vector> rows;
  for (const auto& r : array_of(j, "subspace")) rows.push_back(vector_from_json(r, ambient));
  return Subspace::span(ambient, rows);
}

Json algebra_to_json(const LieAlgebra& l) {
  Json out;
  out["dim"] = l.dim();
  out["labels"] = l.labels();
  Json brackets = Json::array();
  for (size_t i = 0; i < l.dim(); ++i)
    for (size_t j = i + 1; j < l.dim(); ++j) {
      Json c = Json::object();
      for (size_t k = 0; k < l.dim(); ++k)
        if (l.c(i, j, k) != 0) c[std::to_string(k)] = rational_to_json(l.c(i, j, k));
      if (!c.empty()) brackets.push_back(Json{{"i", i}, {"j", j}, {"c", c}});
    }
  out["bracket"] = brackets;
  return out;
}

LieAlgebra algebra_from_json(const Json& j) {
  const size_t n = dim_of(j);
  std::map<std::pair<size_t, size_t>, Vector> brackets;
  for (const auto& b : array_of(field(j, "bracket"), "bracket")) {
    size_t i = index_of(field(b, "i"), n, "bracket index i"), k = index_of(field(b, "j"), n, "bracket index j");
    if (i >= k) bad("bracket entries must list pairs with i < j");
    const Json& c = field(b, "c");
    if (!c.is_object()) bad("'c' must map basis indices to coefficients");
    Vector v(n);
    for (const auto& [key, value] : c.items()) {
      size_t idx = 0;
      try {
        size_t used = 0;
        idx = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        bad("bracket coefficient key '" + key + "' is not an index");
      }
      if (idx >= n) bad("bracket coefficient index " + key + " out of range");
      v[idx] += rational_from_json(value);
    }
    if (!brackets.emplace(std::pair{i, k}, v).second) bad("bracket pair listed twice");
  }
  return LieAlgebra::from_brackets(n, brackets, labels_of(j));
}

Json hopf_to_json(const HopfAlgebra& h) {
  const size_t m = h.dim();
  const HopfTensors& t = h.tensors();
  Json out;
  out["dim"] = m;
  out["labels"] = h.labels();
  out["mult"] = triples_to_json(t.mult, m, m, m);
  out["unit"] = vector_to_json(t.unit);
  out["comult"] = triples_to_json(t.comult, m, m, m);
  out["counit"] = vector_to_json(t.counit);
  out["antipode"] = matrix_to_json(t.antipode);
  return out;
}

HopfAlgebra hopf_from_json(const Json& j) {
  HopfTensors t;
  t.dim = dim_of(j);
  const size_t m = t.dim;
  t.labels = labels_of(j);
  t.mult = triples_from_json(field(j, "mult"), "mult", m, m, m);
  t.unit = vector_from_json(field(j, "unit"), m);
  t.comult = triples_from_json(field(j, "comult"), "comult", m, m, m);
  t.counit = vector_from_json(field(j, "counit"), m);
  t.antipode = matrix_from_json(field(j, "antipode"), m, m);
  return HopfAlgebra(std::move(t));
}

Json group_to_json(const GroupBackend& g) {
  Json out;
  if (g.is_finite()) {
    out["kind"] = "finite_table";
    out["labels"] = g.labels();
    out["table"] = g.table();
  } else {
    out["kind"] = "free_abelian";
    out["rank"] = g.rank();
  }
  return out;
}

GroupBackend group_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind == "free_abelian") {
    const Json& r = field(j, "rank");
    if (!r.is_number_integer() || r.get<long long>() < 0) bad("'rank' must be a non-negative integer");
    return GroupBackend::free_abelian(r.get<size_t>());
  }
  if (kind != "finite_table") bad("group kind must be 'finite_table' or 'free_abelian'");
  const Json& table = array_of(field(j, "table"), "table");
  std::vector<std::vector<size_t>> rows;
  for (const auto& row : table) {
    std::vector<size_t> r;
    for (const auto& e : array_of(row, "table row")) r.push_back(index_of(e, table.size(), "table entry"));
    rows.push_back(std::move(r));
  }
  return GroupBackend::finite(labels_of(j), std::move(rows));
}

Json grading_to_json(const Grading& g) {
  Json out;
  out["group"] = group_to_json(*g.group);
  Json degrees = Json::array();
  for (const auto& d : g.degrees) {
    if (g.group->is_finite())
      degrees.push_back(g.group->format(d));
    else
      degrees.push_back(d);
  }
  out["degrees"] = degrees;
  return out;
}

Grading grading_from_json(const Json& j) {
  auto group = std::make_shared<const GroupBackend>(group_from_json(field(j, "group")));
  Grading g{group, {}};
  for (const auto& d : array_of(field(j, "degrees"), "degrees")) {
    if (group->is_finite()) {
      if (!d.is_string()) bad("degrees in a finite group are element labels");
      g.degrees.push_back(group->element(d.get<std::string>()));
    } else {
      if (!d.is_array() || d.size() != group->rank()) bad("degrees in Z^k are integer vectors of length k");
      GroupBackend::Element e;
      for (const auto& x : d) {
        if (!x.is_number_integer()) bad("degree components must be integers");
        e.push_back(x.get<long long>());
      }
      g.degrees.push_back(std::move(e));
    }
  }
  return g;
}

Json comodule_to_json(const ComoduleStructure& c) {
  Json out;
  out["dim"] = c.dim;
  out["coaction"] = triples_to_json(c.rho, c.dim, c.dim, c.hopf->dim());
  return out;
}

ComoduleStructure comodule_from_json(const Json& j, std::shared_ptr<const HopfAlgebra> hopf) {
  const size_t n = dim_of(j);
  ComoduleStructure c{hopf, n, triples_from_json(field(j, "coaction"), "coaction", n, n, hopf->dim())};
  return c;
}

Json module_to_json(const ModuleStructure& m) {
  std::vector<Rational> flat;
  for (const auto& a : m.act)
    for (size_t i = 0; i < m.dim; ++i)
      for (size_t k = 0; k < m.dim; ++k) flat.push_back(a(i, k));
  Json out;
  out["dim"] = m.dim;
  out["action"] = triples_to_json(flat, m.act.size(), m.dim, m.dim);
  return out;
}

ModuleStructure module_from_json(const Json& j, std::shared_ptr<const HopfAlgebra> hopf) {
  const size_t n = dim_of(j), m = hopf->dim();
  auto flat = triples_from_json(field(j, "action"), "action", m, n, n);
  ModuleStructure out{hopf, n, {}};
  for (size_t h = 0; h < m; ++h) {
    Matrix a(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) a(i, k) = flat[(h * n + i) * n + k];
    out.act.push_back(std::move(a));
  }
  return out;
}

Json automorphism_to_json(const CyclicAction& a) {
  Json out;
  out["dim"] = a.phi.rows();
  out["matrix"] = matrix_to_json(a.phi);
  return out;
}

CyclicAction automorphism_from_json(const Json& j) {
  const size_t n = dim_of(j);
  return CyclicAction{matrix_from_json(field(j, "matrix"), n, n)};
}

Json representation_to_json(const std::vector<Matrix>& psi) {
  Json out;
  out["dim"] = psi.empty() ? 0 : psi.front().rows();
  Json ms = Json::array();
  for (const auto& m : psi) ms.push_back(matrix_to_json(m));
  out["matrices"] = ms;
  return out;
}

std::vector<Matrix> representation_from_json(const Json& j, size_t algebra_dim) {
  const size_t d = dim_of(j);
  const Json& ms = array_of(field(j, "matrices"), "matrices");
  if (ms.size() != algebra_dim)
    throw Error(ErrorKind::DimensionMismatch, "representation lists " + std::to_string(ms.size()) +
                                                  " matrices for an algebra of dimension " + std::to_string(algebra_dim));
  std::vector<Matrix> out;
  for (const auto& m : ms) out.push_back(matrix_from_json(m, d, d));
  return out;
}

Json cochain_to_json(const Cochain& c) {
  Json out;
  out["degree"] = c.degree();
  out["algebra_dim"] = c.algebra_dim();
  out["space_dim"] = c.space_dim();
  Json values = Json::array();
  for (size_t i = 0; i < c.tuples().size(); ++i)
    if (!is_zero(c.values()[i])) values.push_back(Json{{"args", c.tuples()[i]}, {"value", vector_to_json(c.values()[i])}});
  out["values"] = values;
  return out;
}

Cochain cochain_from_json(const Json& j) {
  const Json& deg = field(j, "degree");
  if (deg != 2 && deg != 3) bad("cochain degree must be 2 or 3");
  const Json& nd = field(j, "algebra_dim");
  const Json& vd = field(j, "space_dim");
  if (!nd.is_number_unsigned() || !vd.is_number_unsigned()) bad("cochain dimensions must be non-negative integers");
  const size_t k = deg.get<size_t>(), n = nd.get<size_t>(), d = vd.get<size_t>();
  Cochain c(k, n, d);
  for (const auto& entry : array_of(field(j, "values"), "values")) {
    const Json& args = field(entry, "args");
    if (!args.is_array() || args.size() != k) bad("cochain arguments must list " + std::to_string(k) + " indices");
    std::vector<size_t> idx;
    for (const auto& a : args) idx.push_back(index_of(a, n, "cochain argument"));
    c.set(idx, vector_from_json(field(entry, "value"), d));
  }
  return c;
}

Json decomposition_to_json(const LeviDecomposition& d) {
  Json out;
  out["B"] = subspace_to_json(d.b);
  out["R"] = subspace_to_json(d.r);
  out["S"] = subspace_to_json(d.s);
  out["N"] = subspace_to_json(d.n);
  Json comps = Json::array();
  for (const auto& c : d.components) comps.push_back(subspace_to_json(c));
  out["components"] = comps;
  Json report = Json::array();
  for (const auto& c : d.report) report.push_back(Json{{"check", c.name}, {"pass", c.pass}});
  out["report"] = report;
  return out;
}

LeviDecomposition decomposition_from_json(const Json& j, size_t ambient) {
  LeviDecomposition d;
  d.b = subspace_from_json(field(j, "B"), ambient);
  d.r = subspace_from_json(field(j, "R"), ambient);
  d.s = subspace_from_json(field(j, "S"), ambient);
  d.n = subspace_from_json(field(j, "N"), ambient);
  for (const auto& c : array_of(field(j, "components"), "components")) d.components.push_back(subspace_from_json(c, ambient));
  if (j.contains("report"))
    for (const auto& c : array_of(j.at("report"), "report")) {
      const Json& pass = field(c, "pass");
      if (!pass.is_boolean() || !field(c, "check").is_string()) bad("report entries are {\"check\": name, \"pass\": bool}");
      d.report.push_back({field(c, "check").get<std::string>(), pass.get<bool>()});
    }
  return d;
}

}  // namespace levikit::io
