#include "core/io.hpp"

#include "core/errors.hpp"

#include <fstream>
#include <sstream>

namespace liedist {

namespace {

Rational rational_from_json_int(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorCode::parse, "expected an integer numerator/denominator, got " + j.dump());
}

ExactVector vector_from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n)
    throw Error(ErrorCode::parse, "expected a coordinate vector of length " + std::to_string(n));
  ExactVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar_from_json(j[i]);
  return v;
}

nlohmann::json vector_to_json(const ExactVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& z : v) a.push_back(scalar_to_json(z));
  return a;
}

std::pair<std::size_t, std::size_t> parse_index_pair(const std::string& key, std::size_t n) {
  auto comma = key.find(',');
  if (comma == std::string::npos)
    throw Error(ErrorCode::parse, "bracket key '" + key + "' is not of the form \"i,j\"");
  std::size_t i = std::stoul(key.substr(0, comma));
  std::size_t j = std::stoul(key.substr(comma + 1));
  if (i >= n || j >= n)
    throw Error(ErrorCode::parse, "bracket key '" + key + "' exceeds the basis");
  return {i, j};
}

}  // namespace

GaussianRational scalar_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return GaussianRational(Rational(j.get<long long>()));
  if (j.is_array()) {
    if (j.size() == 2) {
      Rational den = rational_from_json_int(j[1]);
      if (den == 0) throw Error(ErrorCode::parse, "zero denominator");
      return GaussianRational(rational_from_json_int(j[0]) / den);
    }
    if (j.size() == 4) {
      Rational rd = rational_from_json_int(j[1]), id = rational_from_json_int(j[3]);
      if (rd == 0 || id == 0) throw Error(ErrorCode::parse, "zero denominator");
      return {rational_from_json_int(j[0]) / rd, rational_from_json_int(j[2]) / id};
    }
  }
  throw Error(ErrorCode::parse,
              "scalar must be an integer, [num,den], or [re_num,re_den,im_num,im_den]: " +
                  j.dump());
}

nlohmann::json scalar_to_json(const GaussianRational& z) {
  auto num = [](const Rational& r) { return static_cast<long long>(numerator(r)); };
  auto den = [](const Rational& r) { return static_cast<long long>(denominator(r)); };
  return nlohmann::json::array({num(z.re), den(z.re), num(z.im), den(z.im)});
}

Fixture fixture_from_json(const nlohmann::json& j, const std::string& name) {
  if (!j.is_object()) throw Error(ErrorCode::parse, "input is not a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw Error(ErrorCode::parse, "missing positive integer \"dim\"");
  std::size_t n = j["dim"].get<std::size_t>();
  if (n == 0) throw Error(ErrorCode::parse, "\"dim\" must be positive");

  std::vector<std::string> names;
  if (j.contains("basis")) {
    for (const auto& b : j["basis"]) names.push_back(b.get<std::string>());
    if (names.size() != n) throw Error(ErrorCode::parse, "basis names do not match dim");
  } else {
    for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  }

  std::vector<std::vector<ExactVector>> c(n, std::vector<ExactVector>(n, ExactVector(n)));
  if (j.contains("brackets")) {
    for (const auto& [key, entry] : j["brackets"].items()) {
      auto [bi, bj] = parse_index_pair(key, n);
      for (const auto& [kstr, scalar] : entry.items()) {
        std::size_t k = std::stoul(kstr);
        if (k >= n) throw Error(ErrorCode::parse, "bracket component index out of range");
        GaussianRational val = scalar_from_json(scalar);
        c[bi][bj][k] = val;
        c[bj][bi][k] = -val;
      }
    }
  }

  Fixture f;
  f.name = name;
  f.algebra = std::make_shared<LieAlgebra>(names, c);

  if (j.contains("levi")) {
    std::vector<ExactVector> rows;
    for (const auto& row : j["levi"]) rows.push_back(vector_from_json(row, n));
    f.levi = Subspace::span_of(rows, n);
  } else {
    f.levi = Subspace(n);
  }

  if (j.contains("subgroups")) {
    for (const auto& [sname, rows_json] : j["subgroups"].items()) {
      std::vector<ExactVector> rows;
      for (const auto& row : rows_json) rows.push_back(vector_from_json(row, n));
      f.subgroups[sname] = Subspace::span_of(rows, n);
    }
  }

  if (j.contains("rep")) {
    const auto& rj = j["rep"];
    if (!rj.contains("matrices") || !rj["matrices"].is_array() || rj["matrices"].size() != n)
      throw Error(ErrorCode::parse, "rep.matrices must list one matrix per basis element");
    std::vector<ExactMatrix> rho;
    for (const auto& mj : rj["matrices"]) {
      std::size_t d = mj.size();
      ExactMatrix m(d, d);
      for (std::size_t r = 0; r < d; ++r) {
        if (mj[r].size() != d) throw Error(ErrorCode::parse, "rep matrix is not square");
        for (std::size_t col = 0; col < d; ++col) m(r, col) = scalar_from_json(mj[r][col]);
      }
      rho.push_back(std::move(m));
    }
    bool faithful = rj.value("faithful", true);
    f.rep = std::make_shared<MatrixRep>(f.algebra, rho, faithful);
  }

  // semidirect split: b = solvable radical, l = the declared Levi
  // complement (validated later by the operations that use them)
  f.b_ideal = solvable_radical(*f.algebra);
  f.l_subalg = f.levi;
  return f;
}

nlohmann::json fixture_to_json(const Fixture& f) {
  nlohmann::json j;
  std::size_t n = f.algebra->dim();
  j["dim"] = n;
  j["basis"] = f.algebra->basis_names();
  nlohmann::json brackets = nlohmann::json::object();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      const ExactVector& v = f.algebra->basis_bracket(i, k);
      if (is_zero(v)) continue;
      nlohmann::json entry = nlohmann::json::object();
      for (std::size_t c = 0; c < n; ++c)
        if (!v[c].is_zero()) entry[std::to_string(c)] = scalar_to_json(v[c]);
      brackets[std::to_string(i) + "," + std::to_string(k)] = entry;
    }
  j["brackets"] = brackets;
  if (f.levi.dim() > 0) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : f.levi.basis()) rows.push_back(vector_to_json(r));
    j["levi"] = rows;
  }
  if (!f.subgroups.empty()) {
    nlohmann::json subs = nlohmann::json::object();
    for (const auto& [name, space] : f.subgroups) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : space.basis()) rows.push_back(vector_to_json(r));
      subs[name] = rows;
    }
    j["subgroups"] = subs;
  }
  if (f.rep) {
    nlohmann::json mats = nlohmann::json::array();
    for (std::size_t b = 0; b < n; ++b) {
      ExactMatrix m = f.rep->apply(f.algebra->basis_vector(b));
      nlohmann::json grid = nlohmann::json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        grid.push_back(row);
      }
      mats.push_back(grid);
    }
    j["rep"] = {{"matrices", mats}, {"faithful", f.rep->faithful()}};
  }
  return j;
}

Fixture parse_input_text(const std::string& text, const std::string& display_name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse, "ParseError at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return fixture_from_json(j, display_name);
}

Fixture load_input(const std::string& path_or_name) {
  if (is_builtin_fixture(path_or_name)) return builtin_fixture(path_or_name);
  std::ifstream in(path_or_name);
  if (!in) throw config_error("cannot open input '" + path_or_name + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_input_text(buffer.str(), path_or_name);
}

std::string input_digest(const Fixture& f) {
  std::string dump = fixture_to_json(f).dump();
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : dump) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace liedist
