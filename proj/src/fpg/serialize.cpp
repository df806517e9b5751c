#include "galmod/fpg/serialize.hpp"

#include "galmod/error.hpp"

namespace galmod {

namespace {

std::uint64_t get_uint(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw Error(ErrorKind::ParseError, std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::uint32_t entry(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, where + " is not an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 0) throw Error(ErrorKind::ParseError, where + " is negative");
  return static_cast<std::uint32_t>(x);
}

}  // namespace

nlohmann::json rows_to_json(const MatrixFp& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
  return rows;
}

nlohmann::json module_to_json(const FpGModule& m) {
  return {{"p", m.context().p()},
          {"n", m.context().n()},
          {"dim", m.dim()},
          {"sigma", m.sigma().entries()}};
}

FpGModule module_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "module must be a JSON object");
  const auto p = static_cast<std::uint32_t>(get_uint(j, "p"));
  const auto n = static_cast<std::uint32_t>(get_uint(j, "n"));
  const std::size_t dim = get_uint(j, "dim");
  const GroupContext ctx(p, n);
  if (!j.contains("sigma") || !j.at("sigma").is_array()) throw Error(ErrorKind::ParseError, "field \"sigma\" must be an array");
  const auto& s = j.at("sigma");
  MatrixFp sigma(dim, dim, p);
  if (s.size() == dim && dim > 0 && s.at(0).is_array()) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (!s.at(i).is_array() || s.at(i).size() != dim) {
        throw Error(ErrorKind::ParseError, "sigma row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
      }
      for (std::size_t k = 0; k < dim; ++k) {
        sigma.set(i, k, entry(s.at(i).at(k), "sigma[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
      }
    }
  } else {
    if (s.size() != dim * dim) {
      throw Error(ErrorKind::ParseError, "sigma has " + std::to_string(s.size()) + " entries, expected " +
                                             std::to_string(dim * dim));
    }
    for (std::size_t i = 0; i < dim * dim; ++i) sigma.set(i / dim, i % dim, entry(s.at(i), "sigma[" + std::to_string(i) + "]"));
  }
  return {ctx, std::move(sigma)};
}

nlohmann::json submodule_to_json(const Submodule& s) { return {{"basis", rows_to_json(s.basis())}}; }

Submodule submodule_from_json(const FpGModule& parent, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.at("basis").is_array()) {
    throw Error(ErrorKind::ParseError, "submodule needs a \"basis\" array");
  }
  std::vector<VectorFp> rows;
  for (std::size_t i = 0; i < j.at("basis").size(); ++i) {
    const auto& r = j.at("basis").at(i);
    if (!r.is_array() || r.size() != parent.dim()) {
      throw Error(ErrorKind::ParseError, "basis row " + std::to_string(i) + " must have " + std::to_string(parent.dim()) + " entries");
    }
    VectorFp v;
    for (std::size_t k = 0; k < r.size(); ++k) v.push_back(entry(r.at(k), "basis[" + std::to_string(i) + "]"));
    rows.push_back(std::move(v));
  }
  return {parent, MatrixFp::from_rows(rows, parent.dim(), parent.p())};
}

}  // namespace galmod
