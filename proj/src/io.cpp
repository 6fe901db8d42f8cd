#include "aqg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "aqg/error.hpp"
#include "json.hpp"

namespace aqg {

using json = nlohmann::ordered_json;

namespace {

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void schema(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::SchemaError, "field '" + field + "': " + what);
}

const json& field(const json& doc, const std::string& name) {
  auto it = doc.find(name);
  if (it == doc.end()) schema(name, "missing");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) schema(where, "expected a number");
  return v.get<double>();
}

std::size_t index(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_integer()) schema(where, "expected an integer index");
  const auto i = v.get<std::int64_t>();
  if (i < 0 || static_cast<std::size_t>(i) >= bound)
    throw Error(ErrorCode::RangeError, where + ": index " + std::to_string(i) +
                                           " outside [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(i);
}

const json& entries(const json& doc, const std::string& name, std::size_t width) {
  const json& list = field(doc, name);
  if (!list.is_array()) schema(name, "expected an array");
  for (std::size_t e = 0; e < list.size(); ++e) {
    const json& row = list[e];
    if (!row.is_array() || row.size() != width)
      schema(name, "entry " + std::to_string(e) + " must have " + std::to_string(width) + " numbers");
  }
  return list;
}

/// [i,j,k,re,im] entries accumulated into target(row(i,j,k), col(i,j,k)).
template <typename Place>
Matrix triples(const json& doc, const std::string& name, std::size_t n, Eigen::Index rows,
               Eigen::Index cols, Place place) {
  Matrix m = Matrix::Zero(rows, cols);
  const json& list = entries(doc, name, 5);
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string where = name + "[" + std::to_string(e) + "]";
    const auto& r = list[e];
    const std::size_t i = index(r[0], n, where), j = index(r[1], n, where), k = index(r[2], n, where);
    const auto [row, col] = place(i, j, k);
    m(row, col) += cplx(number(r[3], where), number(r[4], where));
  }
  return m;
}

Matrix pairs(const json& doc, const std::string& name, std::size_t n) {
  const auto d = static_cast<Eigen::Index>(n);
  Matrix m = Matrix::Zero(d, d);
  const json& list = entries(doc, name, 4);
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string where = name + "[" + std::to_string(e) + "]";
    const auto& r = list[e];
    const std::size_t i = index(r[0], n, where), j = index(r[1], n, where);
    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) +=
        cplx(number(r[2], where), number(r[3], where));
  }
  return m;
}

Vector coefficients(const json& doc, const std::string& name, std::size_t n) {
  const json& list = entries(doc, name, 2);
  if (list.size() != n) schema(name, "expected " + std::to_string(n) + " coefficients");
  Vector v(static_cast<Eigen::Index>(n));
  for (std::size_t e = 0; e < n; ++e) {
    const std::string where = name + "[" + std::to_string(e) + "]";
    v(static_cast<Eigen::Index>(e)) = cplx(number(list[e][0], where), number(list[e][1], where));
  }
  return v;
}

json complex_list(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

json pair_list(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.cols(); ++i)
    for (Eigen::Index j = 0; j < m.rows(); ++j)
      if (m(j, i) != cplx{0.0, 0.0}) out.push_back({i, j, m(j, i).real(), m(j, i).imag()});
  return out;
}

bool same(const std::optional<Matrix>& a, const std::optional<Matrix>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || (a->rows() == b->rows() && a->cols() == b->cols() && *a == *b);
}

}  // namespace

bool operator==(const AlgebraFile& a, const AlgebraFile& b) {
  auto vec_same = [](const auto& x, const auto& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->size() == y->size() && *x == *y);
  };
  return a.name == b.name && a.basis == b.basis && a.mult.rows() == b.mult.rows() &&
         a.mult.cols() == b.mult.cols() && a.mult == b.mult && a.comult.rows() == b.comult.rows() &&
         a.comult.cols() == b.comult.cols() && a.comult == b.comult && same(a.star, b.star) &&
         same(a.antipode, b.antipode) && vec_same(a.unit, b.unit) && vec_same(a.counit, b.counit);
}

AlgebraFile parse_algebra_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, location(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) schema("<root>", "expected an object");

  const json& version = field(doc, "schema_version");
  if (!version.is_number_integer() || version.get<int>() != AlgebraFile::kSchemaVersion)
    schema("schema_version", "must be " + std::to_string(AlgebraFile::kSchemaVersion));

  AlgebraFile f;
  const json& name = field(doc, "name");
  if (!name.is_string()) schema("name", "expected a string");
  f.name = name.get<std::string>();

  const json& dim = field(doc, "dimension");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() <= 0) schema("dimension", "expected a positive integer");
  const auto n = static_cast<std::size_t>(dim.get<std::int64_t>());

  const json& basis = field(doc, "basis");
  if (!basis.is_array() || basis.size() != n) schema("basis", "expected " + std::to_string(n) + " labels");
  for (const auto& label : basis) {
    if (!label.is_string()) schema("basis", "labels must be strings");
    f.basis.push_back(label.get<std::string>());
  }

  const auto d = static_cast<Eigen::Index>(n);
  f.mult = triples(doc, "mult", n, d, d * d, [d](std::size_t i, std::size_t j, std::size_t k) {
    return std::pair<Eigen::Index, Eigen::Index>(static_cast<Eigen::Index>(k),
                                                 static_cast<Eigen::Index>(i) * d + static_cast<Eigen::Index>(j));
  });
  f.comult = triples(doc, "comult", n, d * d, d, [d](std::size_t i, std::size_t j, std::size_t k) {
    return std::pair<Eigen::Index, Eigen::Index>(static_cast<Eigen::Index>(j) * d + static_cast<Eigen::Index>(k),
                                                 static_cast<Eigen::Index>(i));
  });
  if (doc.contains("star")) f.star = pairs(doc, "star", n);
  if (doc.contains("unit")) f.unit = coefficients(doc, "unit", n);
  if (doc.contains("antipode")) f.antipode = pairs(doc, "antipode", n);
  if (doc.contains("counit")) f.counit = coefficients(doc, "counit", n).transpose();

  static const char* const known[] = {"schema_version", "name", "dimension", "basis", "mult",
                                      "comult", "star", "unit", "antipode", "counit"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) schema(key, "unknown field");
  }
  return f;
}

AlgebraFile load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra_file(ss.str());
}

std::string serialize(const AlgebraFile& f) {
  const auto n = static_cast<Eigen::Index>(f.dimension());
  json doc;
  doc["schema_version"] = AlgebraFile::kSchemaVersion;
  doc["name"] = f.name;
  doc["dimension"] = n;
  doc["basis"] = f.basis;
  json mult = json::array();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        const cplx c = f.mult(k, i * n + j);
        if (c != cplx{0.0, 0.0}) mult.push_back({i, j, k, c.real(), c.imag()});
      }
  doc["mult"] = mult;
  json comult = json::array();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        const cplx c = f.comult(j * n + k, i);
        if (c != cplx{0.0, 0.0}) comult.push_back({i, j, k, c.real(), c.imag()});
      }
  doc["comult"] = comult;
  if (f.star) doc["star"] = pair_list(*f.star);
  if (f.unit) doc["unit"] = complex_list(*f.unit);
  if (f.antipode) doc["antipode"] = pair_list(*f.antipode);
  if (f.counit) doc["counit"] = complex_list(f.counit->transpose());

  // Two-space indent with one list entry per line.
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : doc.items()) {
    out += first ? "" : ",\n";
    first = false;
    out += "  " + json(key).dump() + ": ";
    if (!value.is_array() || value.empty()) {
      out += value.dump();
      continue;
    }
    out += "[\n";
    for (std::size_t e = 0; e < value.size(); ++e) out += "    " + value[e].dump() + (e + 1 < value.size() ? ",\n" : "\n");
    out += "  ]";
  }
  return out + "\n}\n";
}

void save_algebra_file(const AlgebraFile& file, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::SchemaError, "cannot write " + path.string());
  out << serialize(file);
}

FiniteDimAlgebra to_algebra(const AlgebraFile& f) {
  FiniteDimAlgebra a;
  a.name = f.name;
  a.labels = f.basis;
  a.product = f.mult;
  a.star = f.star;
  a.unit = f.unit;
  return a;
}

DeclaredHopfData declared_data(const AlgebraFile& f) { return {f.antipode, f.counit}; }

AlgebraFile to_file(const HopfData& h, std::string name) {
  AlgebraFile f;
  f.name = std::move(name);
  f.basis = h.algebra.labels;
  f.mult = h.algebra.product;
  f.comult = h.coproduct;
  f.star = h.algebra.star;
  f.unit = h.unit;
  f.antipode = h.antipode;
  f.counit = h.counit;
  return f;
}

}  // namespace aqg
