#include "hurwitz_sos/serialization.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace hsos::io {

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
    return mpz_class(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw FormatError("not a decimal integer: " + j.dump());
    return z;
  }
  throw FormatError("expected an integer, got " + j.dump());
}

std::optional<HalfLetter> half_letter_from_json(const json& j, const char* field) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "a") return HalfLetter::a;
    if (s == "b") return HalfLetter::b;
  }
  throw FormatError(std::string(field) + " must be \"a\", \"b\" or null, got " + j.dump());
}

json half_letter_to_json(const std::optional<HalfLetter>& h) {
  if (!h) return nullptr;
  return std::string(1, static_cast<char>(*h));
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object()) throw FormatError("expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw FormatError(std::string("missing field \"") + name + "\"");
  return *it;
}

int small_int(const json& j, const char* name) {
  if (!j.is_number_integer()) throw FormatError(std::string(name) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw FormatError(std::string(name) + " out of range");
  }
  return static_cast<int>(v);
}

std::vector<GaussianRational> vector_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of Gaussian rationals");
  std::vector<GaussianRational> v;
  for (const auto& e : j) v.push_back(gaussian_from_json(e));
  return v;
}

json vector_to_json(const std::vector<GaussianRational>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(gaussian_to_json(z));
  return out;
}

GramMatrix gram_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("gram must be an array of rows");
  GramMatrix g(j.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != j.size()) throw FormatError("gram must be square");
    for (std::size_t c = 0; c < j.size(); ++c) g(r, c) = gaussian_from_json(j[r][c]);
  }
  return g;
}

json gram_to_json(const GramMatrix& g) {
  json rows = json::array();
  for (std::size_t r = 0; r < g.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < g.dim(); ++c) row.push_back(gaussian_to_json(g(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json rational_to_json(const Rational& q) {
  return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return Rational(integer_from_json(j));
  if (!j.is_array() || j.size() != 2) throw FormatError("rational must be [num, den], got " + j.dump());
  const mpz_class den = integer_from_json(j[1]);
  if (den == 0) throw FormatError("zero denominator in " + j.dump());
  Rational q(integer_from_json(j[0]), den);
  q.canonicalize();
  return q;
}

json gaussian_to_json(const GaussianRational& z) {
  return json{{"re", rational_to_json(z.re())}, {"im", rational_to_json(z.im())}};
}

GaussianRational gaussian_from_json(const json& j) {
  if (j.is_object()) {
    Rational re = rational_from_json(field(j, "re"));
    Rational im = j.contains("im") ? rational_from_json(j["im"]) : Rational(0);
    return {re, im};
  }
  // Plain real entries ([num, den] or an integer) are accepted as shorthand.
  return GaussianRational(rational_from_json(j));
}

json block_shape_to_json(const SandwichBlock& block) {
  json basis = json::array();
  for (const Word& w : block.basis) basis.push_back(w.str());
  return json{{"prefix", half_letter_to_json(block.prefix)},
              {"suffix", half_letter_to_json(block.suffix)},
              {"basis", basis}};
}

SandwichBlock block_shape_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("block must be an object");
  SandwichBlock block;
  block.prefix = half_letter_from_json(j.value("prefix", json(nullptr)), "prefix");
  block.suffix = half_letter_from_json(j.value("suffix", json(nullptr)), "suffix");
  const json& basis = field(j, "basis");
  if (!basis.is_array()) throw FormatError("basis must be an array of words");
  for (const auto& w : basis) {
    if (!w.is_string()) throw FormatError("basis words must be strings");
    try {
      block.basis.emplace_back(w.get<std::string>());
    } catch (const InvalidInput& e) {
      throw FormatError(e.what());
    }
  }
  return block;
}

json certificate_to_json(const Certificate& cert) {
  json blocks = json::array();
  for (const auto& [shape, gram] : cert.blocks) {
    json b = block_shape_to_json(shape);
    b["gram"] = gram_to_json(gram);
    blocks.push_back(std::move(b));
  }
  return json{{"p", cert.p}, {"r", cert.r}, {"blocks", blocks}};
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate cert;
    cert.p = small_int(field(j, "p"), "p");
    cert.r = small_int(field(j, "r"), "r");
    const json& blocks = field(j, "blocks");
    if (!blocks.is_array()) throw FormatError("blocks must be an array");
    for (const auto& b : blocks) {
      CertificateBlock cb{block_shape_from_json(b), GramMatrix()};
      if (b.contains("gram")) {
        cb.gram = gram_from_json(b["gram"]);
      } else if (b.contains("vectors")) {
        const json& vs = b["vectors"];
        if (!vs.is_array()) throw FormatError("vectors must be an array");
        std::vector<std::vector<GaussianRational>> vectors;
        for (const auto& v : vs) vectors.push_back(vector_from_json(v));
        cb.gram = gram_from_vectors(vectors);
        if (cb.gram.dim() == 0) cb.gram = GramMatrix(cb.shape.basis.size());
      } else {
        throw FormatError("block needs \"gram\" or \"vectors\"");
      }
      if (b.contains("scale")) cb.gram *= GaussianRational(rational_from_json(b["scale"]));
      cert.blocks.push_back(std::move(cb));
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  } catch (const StructureError& e) {
    throw FormatError(e.what());
  }
}

Ansatz ansatz_from_json(const json& j) {
  try {
    Ansatz a;
    if (j.contains("p")) a.p = small_int(j["p"], "p");
    if (j.contains("r")) a.r = small_int(j["r"], "r");
    const json& blocks = field(j, "blocks");
    if (!blocks.is_array()) throw FormatError("blocks must be an array");
    for (const auto& b : blocks) a.blocks.push_back(block_shape_from_json(b));
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  }
}

json ansatz_to_json(const Ansatz& a) {
  json blocks = json::array();
  for (const auto& b : a.blocks) blocks.push_back(block_shape_to_json(b));
  json out{{"blocks", blocks}};
  if (a.p) out["p"] = *a.p;
  if (a.r) out["r"] = *a.r;
  return out;
}

json residual_to_json(const TracePolynomial& t) {
  json out = json::object();
  for (const auto& [cls, z] : t.terms()) {
    out[cls.str()] = json::array({integer_to_json(z.re().get_num()), integer_to_json(z.re().get_den()),
                                  integer_to_json(z.im().get_num()), integer_to_json(z.im().get_den())});
  }
  return out;
}

json report_to_json(const VerifyReport& report) {
  json out{{"matched", report.matched}, {"psd", report.psd}, {"residual", residual_to_json(report.residual)}};
  if (report.witness) {
    out["witness"] = vector_to_json(*report.witness);
    out["witness_block"] = *report.witness_block;
    out["witness_value"] = rational_to_json(*report.witness_value);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json outcome_to_json(const SearchOutcome& outcome, const SearchOptions& options) {
  json out{{"status", to_string(outcome.status)},
           {"iterations", outcome.iterations},
           {"residual", outcome.residual},
           {"note", outcome.note},
           {"options",
            {{"max_iter", options.max_iter},
             {"tol", options.tol},
             {"denom_bound", options.denom_bound},
             {"seed", options.seed},
             {"margin", options.margin}}}};
  out["certificate"] = outcome.certificate ? certificate_to_json(*outcome.certificate) : json(nullptr);
  if (outcome.witness) {
    out["witness"] = {{"block", outcome.witness->block},
                      {"vector", vector_to_json(outcome.witness->vector)},
                      {"value", rational_to_json(outcome.witness->value)},
                      {"forced_gram", gram_to_json(outcome.witness->forced)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace hsos::io
