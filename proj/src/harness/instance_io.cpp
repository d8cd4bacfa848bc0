#include "tdpair/instance_io.hpp"

#include <sstream>

#include <json.hpp>

namespace tdpair {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

Field parse_field(const json& doc) {
  if (!doc.contains("field")) fail("field", "missing");
  const json& f = doc["field"];
  if (f.is_string()) {
    if (f.get<std::string>() != "rational") fail("field", "expected \"rational\" or {\"prime\": p}");
    return Field::rational();
  }
  if (f.is_object() && f.size() == 1 && f.contains("prime") && f["prime"].is_number_unsigned()) {
    const auto p = f["prime"].get<std::uint64_t>();
    try {
      return Field::prime(p);
    } catch (const Error& e) {
      fail("field.prime", e.what());
    }
  }
  fail("field", "expected \"rational\" or {\"prime\": p}");
}

Matrix parse_matrix(const json& doc, const char* key, Field f) {
  if (!doc.contains(key)) fail(key, "missing");
  const json& m = doc[key];
  if (!m.is_array() || m.empty()) fail(key, "expected a non-empty array of rows");
  const std::size_t n = m.size();
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_at = std::string(key) + "[" + std::to_string(i) + "]";
    if (!m[i].is_array() || m[i].size() != n) fail(row_at, "expected " + std::to_string(n) + " entries (square matrix)");
    for (std::size_t j = 0; j < n; ++j) {
      const json& e = m[i][j];
      const std::string at = row_at + "[" + std::to_string(j) + "]";
      std::string text;
      if (e.is_string()) {
        text = e.get<std::string>();
      } else if (e.is_number_integer()) {
        text = e.dump();
      } else {
        fail(at, "expected a string or an integer");
      }
      try {
        out(i, j) = f.parse(text);
      } catch (const Error& err) {
        fail(at, err.what());
      }
    }
  }
  return out;
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "    [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << json(m(i, j).str()).dump();
    os << "]" << (i + 1 < m.rows() ? "," : "") << "\n";
  }
  os << "  ]";
  return os.str();
}

Matrix reduce_matrix(const Matrix& m, Field target) {
  Matrix out(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& v = m(i, j).rational_value();
      const Scalar den = target.from_mpz(v.get_den());
      if (den.is_zero()) {
        throw Error(ErrorCode::ReductionFailed, "p = " + std::to_string(target.modulus()) + " divides the denominator of entry (" +
                                                    std::to_string(i) + "," + std::to_string(j) + ") = " + m(i, j).str());
      }
      out(i, j) = target.from_mpz(v.get_num()) / den;
    }
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  const Field f = parse_field(doc);
  Instance inst;
  inst.pair.A = parse_matrix(doc, "A", f);
  inst.pair.A_star = parse_matrix(doc, "A_star", f);
  if (inst.pair.A.rows() != inst.pair.A_star.rows()) fail("A_star", "size differs from A");
  if (doc.contains("metadata")) {
    const json& meta = doc["metadata"];
    if (!meta.is_object()) fail("metadata", "expected an object");
    if (meta.contains("name")) {
      if (!meta["name"].is_string()) fail("metadata.name", "expected a string");
      inst.name = meta["name"].get<std::string>();
    }
    if (meta.contains("expected_d")) {
      if (!meta["expected_d"].is_number_unsigned()) fail("metadata.expected_d", "expected a non-negative integer");
      inst.expected_d = meta["expected_d"].get<std::size_t>();
    }
    if (meta.contains("expected_beta")) {
      if (!meta["expected_beta"].is_string()) fail("metadata.expected_beta", "expected a string");
      inst.expected_beta = meta["expected_beta"].get<std::string>();
    }
  }
  return inst;
}

std::string write_instance(const Instance& inst) {
  const Field f = inst.pair.field();
  std::ostringstream os;
  os << "{\n  \"field\": ";
  os << (f.is_rational() ? std::string("\"rational\"") : "{\"prime\": " + std::to_string(f.modulus()) + "}");
  os << ",\n  \"A\": " << matrix_text(inst.pair.A);
  os << ",\n  \"A_star\": " << matrix_text(inst.pair.A_star);
  json meta = json::object();
  if (!inst.name.empty()) meta["name"] = inst.name;
  if (inst.expected_d) meta["expected_d"] = *inst.expected_d;
  if (inst.expected_beta) meta["expected_beta"] = *inst.expected_beta;
  os << ",\n  \"metadata\": " << meta.dump() << "\n}\n";
  return os.str();
}

Instance reduce_instance(const Instance& inst, std::uint64_t p) {
  if (!inst.pair.field().is_rational()) {
    throw Error(ErrorCode::ReductionFailed, "instance is already over " + inst.pair.field().name());
  }
  Field target = Field::rational();
  try {
    target = Field::prime(p);
  } catch (const Error& e) {
    throw Error(ErrorCode::ReductionFailed, e.what());
  }
  Instance out = inst;
  out.pair = {reduce_matrix(inst.pair.A, target), reduce_matrix(inst.pair.A_star, target)};
  out.expected_beta.reset();
  return out;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace tdpair
