#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rb3lie/deformation.hpp"
#include "rb3lie/extensions.hpp"
#include "rb3lie/two_algebra.hpp"

namespace rb3lie {

/// Insertion-ordered JSON keeps every report and serialized file deterministic.
using OJson = nlohmann::ordered_json;

inline OJson parse_json_text(const std::string& text) {
  try {
    return OJson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

namespace iod {

inline const OJson& require_field(const OJson& j, const std::string& name, const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(ctx + ": missing field \"" + name + "\"");
  return *it;
}

inline std::size_t get_dim(const OJson& j, const std::string& name, const std::string& ctx) {
  const OJson& v = require_field(j, name, ctx);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
    throw ParseError(ctx + ": field \"" + name + "\" must be a positive integer");
  return v.get<std::size_t>();
}

inline Rational json_rational(const OJson& j, const std::string& ctx) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError(ctx + ": expected a rational as \"p/q\" or an integer");
}

inline Matrix json_matrix(const OJson& j, std::size_t rows, std::size_t cols, const std::string& ctx) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(ctx + ": expected " + std::to_string(rows) + " matrix rows");
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const OJson& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(ctx + ": row " + std::to_string(r + 1) + " must have " +
                       std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      out.at(r, c) = json_rational(row[c], ctx + "[" + std::to_string(r + 1) + "][" +
                                               std::to_string(c + 1) + "]");
  }
  return out;
}

inline OJson matrix_json(const Matrix& M) {
  OJson rows = OJson::array();
  for (std::size_t r = 0; r < M.rows; ++r) {
    OJson row = OJson::array();
    for (std::size_t c = 0; c < M.cols; ++c) row.push_back(format_rational(M.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Sparse vectors are objects keyed by 1-based index strings; absent keys are 0.
inline Vec json_sparse_vec(const OJson& j, std::size_t n, const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": expected a sparse vector object");
  Vec out = zero_vec(n);
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("trailing characters");
    } catch (...) {
      throw ParseError(ctx + ": bad index key \"" + it.key() + "\"");
    }
    if (idx < 1 || idx > n)
      throw ParseError(ctx + ": index " + it.key() + " out of range 1.." + std::to_string(n));
    out[idx - 1] = json_rational(it.value(), ctx + "[" + it.key() + "]");
  }
  return out;
}

inline OJson sparse_vec_json(const Vec& v) {
  OJson out = OJson::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[std::to_string(i + 1)] = format_rational(v[i]);
  return out;
}

/// Slot keys name basis tuples with 1-based indices: pair blocks then the
/// final triple, blocks separated by '|', e.g. "[1,2|1,3|1,2,4]"; a degree-1
/// slot is "[i]". Indices must be strictly increasing inside each block.
inline std::string slot_key(const CochainSpace& sp, const std::vector<int>& slots) {
  std::string key = "[";
  for (std::size_t b = 0; b < sp.pair_blocks(); ++b) {
    if (b > 0) key += "|";
    key += std::to_string(slots[2 * b] + 1) + "," + std::to_string(slots[2 * b + 1] + 1);
  }
  if (sp.n >= 2) {
    if (sp.pair_blocks() > 0) key += "|";
    std::size_t t0 = 2 * sp.pair_blocks();
    key += std::to_string(slots[t0] + 1) + "," + std::to_string(slots[t0 + 1] + 1) + "," +
           std::to_string(slots[t0 + 2] + 1);
  } else if (sp.n == 1) {
    key += std::to_string(slots[0] + 1);
  }
  return key + "]";
}

inline std::vector<int> parse_slot_key(const std::string& key, const CochainSpace& sp,
                                       const std::string& ctx) {
  auto fail = [&]() -> std::vector<int> {
    throw ParseError(ctx + ": bad slot key \"" + key + "\"");
  };
  if (key.size() < 2 || key.front() != '[' || key.back() != ']') return fail();
  std::vector<std::vector<int>> blocks(1);
  std::string digits;
  auto flush_index = [&]() {
    if (digits.empty()) fail();
    blocks.back().push_back(std::stoi(digits) - 1);
    digits.clear();
  };
  for (std::size_t p = 1; p + 1 < key.size(); ++p) {
    char c = key[p];
    if (c >= '0' && c <= '9') {
      digits += c;
    } else if (c == ',') {
      flush_index();
    } else if (c == '|') {
      flush_index();
      blocks.emplace_back();
    } else {
      return fail();
    }
  }
  flush_index();
  std::size_t expected_blocks = sp.pair_blocks() + (sp.n >= 2 ? 1 : 0) + (sp.n == 1 ? 1 : 0);
  if (blocks.size() != expected_blocks) return fail();
  std::vector<int> slots;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::size_t want = (sp.n == 1) ? 1 : (b < sp.pair_blocks() ? 2 : 3);
    if (blocks[b].size() != want) return fail();
    for (std::size_t t = 0; t < blocks[b].size(); ++t) {
      int idx = blocks[b][t];
      if (idx < 0 || idx >= static_cast<int>(sp.d))
        throw ParseError(ctx + ": slot index out of range in \"" + key + "\"");
      if (t > 0 && blocks[b][t - 1] >= idx)
        throw ParseError(ctx + ": slot indices must be strictly increasing in \"" + key + "\"");
      slots.push_back(idx);
    }
  }
  return slots;
}

/// Cochain coordinates from a {slot key: sparse module vector} object.
inline Vec json_cochain(const OJson& j, const CochainSpace& sp, const std::string& ctx) {
  Vec out = zero_vec(sp.dim);
  if (j.is_null()) return out;
  if (!j.is_object()) throw ParseError(ctx + ": expected an object of slot keys");
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::vector<int> slots = parse_slot_key(it.key(), sp, ctx);
    std::size_t tr = sp.tuple_rank(slots);
    Vec val = json_sparse_vec(it.value(), sp.m, ctx + it.key());
    for (std::size_t t = 0; t < sp.m; ++t) out[sp.coord(tr, t)] = val[t];
  }
  return out;
}

inline OJson cochain_json(const Vec& coords, const CochainSpace& sp) {
  OJson out = OJson::object();
  for (std::size_t tr = 0; tr < sp.tuples; ++tr) {
    Vec val = zero_vec(sp.m);
    bool nonzero = false;
    for (std::size_t t = 0; t < sp.m; ++t) {
      val[t] = coords[sp.coord(tr, t)];
      nonzero = nonzero || !val[t].is_zero();
    }
    if (nonzero) out[slot_key(sp, sp.tuple_slots(tr))] = sparse_vec_json(val);
  }
  return out;
}

/// Pair keys are "[i,j]" with 1-based strictly increasing indices.
inline std::pair<int, int> parse_pair_key(const std::string& key, std::size_t d,
                                          const std::string& ctx) {
  std::size_t comma = key.find(',');
  if (key.size() < 2 || key.front() != '[' || key.back() != ']' || comma == std::string::npos)
    throw ParseError(ctx + ": bad pair key \"" + key + "\"");
  int a = 0, b = 0;
  try {
    a = std::stoi(key.substr(1, comma - 1)) - 1;
    b = std::stoi(key.substr(comma + 1, key.size() - comma - 2)) - 1;
  } catch (...) {
    throw ParseError(ctx + ": bad pair key \"" + key + "\"");
  }
  if (a < 0 || b <= a || b >= static_cast<int>(d))
    throw ParseError(ctx + ": pair \"" + key + "\" must be strictly increasing and in range");
  return {a, b};
}

/// Bracket tables are degree-2 cochain objects with algebra-valued entries.
inline void parse_bracket_table(const OJson& j, ThreeLieAlgebra& g, const std::string& ctx) {
  if (j.is_null()) return;
  CochainSpace sp(g.dim, g.dim, 2);
  Vec coords = json_cochain(j, sp, ctx);
  for (std::size_t tr = 0; tr < sp.tuples; ++tr)
    for (std::size_t t = 0; t < g.dim; ++t) g.table[tr][t] = coords[sp.coord(tr, t)];
}

inline OJson bracket_table_json(const ThreeLieAlgebra& g) {
  OJson out = OJson::object();
  CochainSpace sp(g.dim, g.dim, 2);
  for (std::size_t tr = 0; tr < sp.tuples; ++tr)
    if (!vec_is_zero(g.table[tr])) out[slot_key(sp, sp.tuple_slots(tr))] = sparse_vec_json(g.table[tr]);
  return out;
}

}  // namespace iod

inline std::string file_kind(const OJson& j) {
  const OJson& k = iod::require_field(j, "kind", "input");
  if (!k.is_string()) throw ParseError("input: \"kind\" must be a string");
  return k.get<std::string>();
}

/// Contents of a kind:"algebra" file; `has_rep` marks an explicit module block.
struct AlgebraFileData {
  bool has_rep = false;
  RotaBaxterStructure rb;
  RBRepresentation rep;  // rep.rb == rb when has_rep
};

inline AlgebraFileData parse_algebra_file(const OJson& j) {
  if (file_kind(j) != "algebra") throw ParseError("input: expected kind \"algebra\"");
  AlgebraFileData out;
  std::size_t d = iod::get_dim(j, "dim", "algebra");
  out.rb.algebra = ThreeLieAlgebra::abelian(d);
  out.rb.algebra.verified = false;
  if (j.contains("basis")) {
    const OJson& names = j["basis"];
    if (!names.is_array() || names.size() != d)
      throw ParseError("algebra: \"basis\" must list one name per dimension");
    for (const auto& nm : names) {
      if (!nm.is_string()) throw ParseError("algebra: basis names must be strings");
      out.rb.algebra.basis_names.push_back(nm.get<std::string>());
    }
  }
  out.rb.weight = iod::json_rational(iod::require_field(j, "weight", "algebra"), "algebra.weight");
  if (j.contains("bracket")) iod::parse_bracket_table(j["bracket"], out.rb.algebra, "algebra.bracket");
  out.rb.T = j.contains("T") ? iod::json_matrix(j["T"], d, d, "algebra.T") : Matrix(d, d);

  if (j.contains("representation")) {
    const OJson& rj = j["representation"];
    std::size_t m = iod::get_dim(rj, "dim", "algebra.representation");
    out.has_rep = true;
    out.rep.rep.algebra = out.rb.algebra;
    out.rep.rep.mdim = m;
    out.rep.rep.rho.assign(pair_count(d), Matrix(m, m));
    if (rj.contains("rho")) {
      const OJson& rho = rj["rho"];
      if (!rho.is_object()) throw ParseError("algebra.representation.rho: expected an object");
      for (auto it = rho.begin(); it != rho.end(); ++it) {
        auto [a, b] = iod::parse_pair_key(it.key(), d, "algebra.representation.rho");
        out.rep.rep.rho[pair_rank(a, b, d)] =
            iod::json_matrix(it.value(), m, m, "algebra.representation.rho" + it.key());
      }
    }
    out.rep.TM = rj.contains("TM") ? iod::json_matrix(rj["TM"], m, m, "algebra.representation.TM")
                                   : Matrix(m, m);
    out.rep.rb = out.rb;
  }
  return out;
}

inline OJson algebra_file_json(const RotaBaxterStructure& rb, const RBRepresentation* rep = nullptr) {
  OJson j = OJson::object();
  j["kind"] = "algebra";
  j["dim"] = rb.algebra.dim;
  j["weight"] = format_rational(rb.weight);
  if (!rb.algebra.basis_names.empty()) {
    OJson names = OJson::array();
    for (std::size_t i = 0; i < rb.algebra.dim; ++i) names.push_back(rb.algebra.name_of(i));
    j["basis"] = std::move(names);
  }
  j["bracket"] = iod::bracket_table_json(rb.algebra);
  j["T"] = iod::matrix_json(rb.T);
  if (rep != nullptr) {
    OJson rj = OJson::object();
    rj["dim"] = rep->mdim();
    OJson rho = OJson::object();
    for_each_pair(rb.algebra.dim, [&](int a, int b) {
      const Matrix& R = rep->rep.rho[pair_rank(a, b, rb.algebra.dim)];
      if (!R.is_zero())
        rho["[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]"] = iod::matrix_json(R);
    });
    rj["rho"] = std::move(rho);
    rj["TM"] = iod::matrix_json(rep->TM);
    j["representation"] = std::move(rj);
  }
  return j;
}

inline std::pair<TruncatedDeformation, DeformationMode> parse_deformation_file(
    const OJson& j, const RotaBaxterStructure& base) {
  if (file_kind(j) != "deformation") throw ParseError("input: expected kind \"deformation\"");
  const OJson& oj = iod::require_field(j, "order", "deformation");
  if (!oj.is_number_unsigned() || oj.get<int>() < 1)
    throw ParseError("deformation: \"order\" must be a positive integer");
  const OJson& mj = iod::require_field(j, "mode", "deformation");
  DeformationMode mode;
  if (mj == "pair")
    mode = DeformationMode::Pair;
  else if (mj == "operator")
    mode = DeformationMode::OperatorOnly;
  else
    throw ParseError("deformation: \"mode\" must be \"pair\" or \"operator\"");

  TruncatedDeformation D = TruncatedDeformation::trivial(base, oj.get<int>());
  auto order_of = [&](const std::string& key, const std::string& ctx) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument("trailing characters");
    } catch (...) {
      throw ParseError(ctx + ": bad order key \"" + key + "\"");
    }
    if (k < 1 || k > D.order)
      throw ParseError(ctx + ": order " + key + " outside 1.." + std::to_string(D.order));
    return k;
  };
  if (j.contains("bracket_terms")) {
    const OJson& bt = j["bracket_terms"];
    if (!bt.is_object()) throw ParseError("deformation.bracket_terms: expected an object");
    for (auto it = bt.begin(); it != bt.end(); ++it) {
      int k = order_of(it.key(), "deformation.bracket_terms");
      iod::parse_bracket_table(it.value(), D.mu[k - 1],
                               "deformation.bracket_terms." + it.key());
    }
  }
  if (j.contains("operator_terms")) {
    const OJson& ot = j["operator_terms"];
    if (!ot.is_object()) throw ParseError("deformation.operator_terms: expected an object");
    for (auto it = ot.begin(); it != ot.end(); ++it) {
      int k = order_of(it.key(), "deformation.operator_terms");
      D.t[k - 1] = iod::json_matrix(it.value(), base.algebra.dim, base.algebra.dim,
                                    "deformation.operator_terms." + it.key());
    }
  }
  return {std::move(D), mode};
}

inline OJson deformation_file_json(const TruncatedDeformation& D, DeformationMode mode) {
  OJson j = OJson::object();
  j["kind"] = "deformation";
  j["order"] = D.order;
  j["mode"] = (mode == DeformationMode::Pair) ? "pair" : "operator";
  OJson bt = OJson::object();
  OJson ot = OJson::object();
  for (int k = 1; k <= D.order; ++k) {
    OJson table = iod::bracket_table_json(D.mu[k - 1]);
    if (!table.empty()) bt[std::to_string(k)] = std::move(table);
    if (!D.t[k - 1].is_zero()) ot[std::to_string(k)] = iod::matrix_json(D.t[k - 1]);
  }
  j["bracket_terms"] = std::move(bt);
  j["operator_terms"] = std::move(ot);
  return j;
}

/// Combined cochain of the mapping complex: a degree-n component plus a
/// degree-(n-1) operator component, stored relative to an algebra/module pair.
struct CocycleFileData {
  int degree = 2;
  Vec coords;  // layout: degree-n block then operator block
};

inline CocycleFileData parse_cocycle_file(const OJson& j, std::size_t d, std::size_t m) {
  if (file_kind(j) != "cocycle") throw ParseError("input: expected kind \"cocycle\"");
  const OJson& dj = iod::require_field(j, "degree", "cocycle");
  if (!dj.is_number_unsigned() || dj.get<int>() < 1)
    throw ParseError("cocycle: \"degree\" must be a positive integer");
  CocycleFileData out;
  out.degree = dj.get<int>();
  CochainSpace top(d, m, out.degree);
  CochainSpace bot(d, m, out.degree - 1);
  out.coords = zero_vec(top.dim + bot.dim);
  if (j.contains("f")) {
    Vec f = iod::json_cochain(j["f"], top, "cocycle.f");
    for (std::size_t i = 0; i < top.dim; ++i) out.coords[i] = f[i];
  }
  if (j.contains("g")) {
    Vec g;
    if (out.degree == 1)
      g = iod::json_sparse_vec(j["g"], m, "cocycle.g");
    else
      g = iod::json_cochain(j["g"], bot, "cocycle.g");
    for (std::size_t i = 0; i < bot.dim; ++i) out.coords[top.dim + i] = g[i];
  }
  return out;
}

inline OJson cocycle_file_json(std::size_t d, std::size_t m, int degree, const Vec& coords) {
  CochainSpace top(d, m, degree);
  CochainSpace bot(d, m, degree - 1);
  OJson j = OJson::object();
  j["kind"] = "cocycle";
  j["degree"] = degree;
  j["f"] = iod::cochain_json(coords, top);
  if (degree == 1) {
    Vec g(coords.begin() + static_cast<long>(top.dim), coords.end());
    j["g"] = iod::sparse_vec_json(g);
  } else {
    Vec g(coords.begin() + static_cast<long>(top.dim), coords.end());
    j["g"] = iod::cochain_json(g, bot);
  }
  return j;
}

inline AbelianExtension parse_extension_file(const OJson& j) {
  if (file_kind(j) != "extension") throw ParseError("input: expected kind \"extension\"");
  std::size_t d = iod::get_dim(j, "base_dim", "extension");
  std::size_t m = iod::get_dim(j, "module_dim", "extension");
  Rational w = iod::json_rational(iod::require_field(j, "weight", "extension"), "extension.weight");
  AbelianExtension E;
  E.base.algebra = ThreeLieAlgebra::abelian(d);
  E.base.algebra.verified = false;
  E.base.weight = w;
  E.total.algebra = ThreeLieAlgebra::abelian(d + m);
  E.total.algebra.verified = false;
  E.total.weight = w;
  const OJson& bj = iod::require_field(j, "base", "extension");
  if (bj.contains("bracket")) iod::parse_bracket_table(bj["bracket"], E.base.algebra, "extension.base.bracket");
  E.base.T = bj.contains("T") ? iod::json_matrix(bj["T"], d, d, "extension.base.T") : Matrix(d, d);
  const OJson& tj = iod::require_field(j, "total", "extension");
  if (tj.contains("bracket"))
    iod::parse_bracket_table(tj["bracket"], E.total.algebra, "extension.total.bracket");
  E.total.T =
      tj.contains("T") ? iod::json_matrix(tj["T"], d + m, d + m, "extension.total.T") : Matrix(d + m, d + m);
  if (j.contains("inclusion"))
    E.inclusion = iod::json_matrix(j["inclusion"], d + m, m, "extension.inclusion");
  else {
    E.inclusion = Matrix(d + m, m);
    for (std::size_t t = 0; t < m; ++t) E.inclusion.at(d + t, t) = 1;
  }
  if (j.contains("projection"))
    E.projection = iod::json_matrix(j["projection"], d, d + m, "extension.projection");
  else {
    E.projection = Matrix(d, d + m);
    for (std::size_t t = 0; t < d; ++t) E.projection.at(t, t) = 1;
  }
  E.TM = j.contains("TM") ? iod::json_matrix(j["TM"], m, m, "extension.TM") : Matrix(m, m);
  return E;
}

inline OJson extension_file_json(const AbelianExtension& E) {
  OJson j = OJson::object();
  j["kind"] = "extension";
  j["base_dim"] = E.base.algebra.dim;
  j["module_dim"] = E.inclusion.cols;
  j["weight"] = format_rational(E.base.weight);
  OJson bj = OJson::object();
  bj["bracket"] = iod::bracket_table_json(E.base.algebra);
  bj["T"] = iod::matrix_json(E.base.T);
  j["base"] = std::move(bj);
  OJson tj = OJson::object();
  tj["bracket"] = iod::bracket_table_json(E.total.algebra);
  tj["T"] = iod::matrix_json(E.total.T);
  j["total"] = std::move(tj);
  j["inclusion"] = iod::matrix_json(E.inclusion);
  j["projection"] = iod::matrix_json(E.projection);
  j["TM"] = iod::matrix_json(E.TM);
  return j;
}

inline RB2Algebra parse_twoalg_file(const OJson& j) {
  if (file_kind(j) != "twoalg") throw ParseError("input: expected kind \"twoalg\"");
  std::size_t d0 = iod::get_dim(j, "dim0", "twoalg");
  std::size_t d1 = iod::get_dim(j, "dim1", "twoalg");
  RB2Algebra A;
  A.underlying = ThreeLie2Algebra::zero(d0, d1);
  A.weight = iod::json_rational(iod::require_field(j, "weight", "twoalg"), "twoalg.weight");
  if (j.contains("dmap")) A.underlying.dmap = iod::json_matrix(j["dmap"], d0, d1, "twoalg.dmap");
  if (j.contains("bracket0"))
    iod::parse_bracket_table(j["bracket0"], A.underlying.l3_000, "twoalg.bracket0");
  if (j.contains("action")) {
    const OJson& act = j["action"];
    if (!act.is_object()) throw ParseError("twoalg.action: expected an object");
    for (auto it = act.begin(); it != act.end(); ++it) {
      auto [a, b] = iod::parse_pair_key(it.key(), d0, "twoalg.action");
      A.underlying.l3_001[pair_rank(a, b, d0)] =
          iod::json_matrix(it.value(), d1, d1, "twoalg.action" + it.key());
    }
  }
  if (j.contains("l5")) A.underlying.l5 = iod::json_cochain(j["l5"], A.underlying.l5_space(), "twoalg.l5");
  A.T0 = j.contains("T0") ? iod::json_matrix(j["T0"], d0, d0, "twoalg.T0") : Matrix(d0, d0);
  A.T1 = j.contains("T1") ? iod::json_matrix(j["T1"], d1, d1, "twoalg.T1") : Matrix(d1, d1);
  A.t2.assign(triple_count(d0), zero_vec(d1));
  if (j.contains("T2")) {
    CochainSpace sp(d0, d1, 2);
    Vec coords = iod::json_cochain(j["T2"], sp, "twoalg.T2");
    for (std::size_t tr = 0; tr < sp.tuples; ++tr)
      for (std::size_t t = 0; t < d1; ++t) A.t2[tr][t] = coords[sp.coord(tr, t)];
  }
  return A;
}

inline OJson twoalg_file_json(const RB2Algebra& A) {
  const std::size_t d0 = A.underlying.d0, d1 = A.underlying.d1;
  OJson j = OJson::object();
  j["kind"] = "twoalg";
  j["dim0"] = d0;
  j["dim1"] = d1;
  j["weight"] = format_rational(A.weight);
  j["dmap"] = iod::matrix_json(A.underlying.dmap);
  j["bracket0"] = iod::bracket_table_json(A.underlying.l3_000);
  OJson act = OJson::object();
  for_each_pair(d0, [&](int a, int b) {
    const Matrix& S = A.underlying.l3_001[pair_rank(a, b, d0)];
    if (!S.is_zero())
      act["[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]"] = iod::matrix_json(S);
  });
  j["action"] = std::move(act);
  j["l5"] = iod::cochain_json(A.underlying.l5, A.underlying.l5_space());
  j["T0"] = iod::matrix_json(A.T0);
  j["T1"] = iod::matrix_json(A.T1);
  CochainSpace sp(d0, d1, 2);
  Vec t2_coords = zero_vec(sp.dim);
  for (std::size_t tr = 0; tr < sp.tuples; ++tr)
    for (std::size_t t = 0; t < d1; ++t) t2_coords[sp.coord(tr, t)] = A.t2[tr][t];
  j["T2"] = iod::cochain_json(t2_coords, sp);
  return j;
}

inline CrossedModule parse_crossed_module_file(const OJson& j) {
  if (file_kind(j) != "crossed-module") throw ParseError("input: expected kind \"crossed-module\"");
  std::size_t d0 = iod::get_dim(j, "dim0", "crossed-module");
  std::size_t d1 = iod::get_dim(j, "dim1", "crossed-module");
  CrossedModule C;
  C.base.algebra = ThreeLieAlgebra::abelian(d0);
  C.base.algebra.verified = false;
  C.base.weight =
      iod::json_rational(iod::require_field(j, "weight", "crossed-module"), "crossed-module.weight");
  const OJson& bj = iod::require_field(j, "base", "crossed-module");
  if (bj.contains("bracket"))
    iod::parse_bracket_table(bj["bracket"], C.base.algebra, "crossed-module.base.bracket");
  C.base.T = bj.contains("T") ? iod::json_matrix(bj["T"], d0, d0, "crossed-module.base.T") : Matrix(d0, d0);
  C.g1 = ThreeLieAlgebra::abelian(d1);
  C.g1.verified = false;
  if (j.contains("bracket1")) iod::parse_bracket_table(j["bracket1"], C.g1, "crossed-module.bracket1");
  C.dmap = j.contains("dmap") ? iod::json_matrix(j["dmap"], d0, d1, "crossed-module.dmap")
                              : Matrix(d0, d1);
  C.S.assign(pair_count(d0), Matrix(d1, d1));
  if (j.contains("S")) {
    const OJson& sj = j["S"];
    if (!sj.is_object()) throw ParseError("crossed-module.S: expected an object");
    for (auto it = sj.begin(); it != sj.end(); ++it) {
      auto [a, b] = iod::parse_pair_key(it.key(), d0, "crossed-module.S");
      C.S[pair_rank(a, b, d0)] = iod::json_matrix(it.value(), d1, d1, "crossed-module.S" + it.key());
    }
  }
  C.T1 = j.contains("T1") ? iod::json_matrix(j["T1"], d1, d1, "crossed-module.T1") : Matrix(d1, d1);
  return C;
}

inline OJson crossed_module_file_json(const CrossedModule& C) {
  const std::size_t d0 = C.base.algebra.dim, d1 = C.g1.dim;
  OJson j = OJson::object();
  j["kind"] = "crossed-module";
  j["dim0"] = d0;
  j["dim1"] = d1;
  j["weight"] = format_rational(C.base.weight);
  OJson bj = OJson::object();
  bj["bracket"] = iod::bracket_table_json(C.base.algebra);
  bj["T"] = iod::matrix_json(C.base.T);
  j["base"] = std::move(bj);
  j["bracket1"] = iod::bracket_table_json(C.g1);
  j["dmap"] = iod::matrix_json(C.dmap);
  OJson sj = OJson::object();
  for_each_pair(d0, [&](int a, int b) {
    const Matrix& S = C.S[pair_rank(a, b, d0)];
    if (!S.is_zero())
      sj["[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]"] = iod::matrix_json(S);
  });
  j["S"] = std::move(sj);
  j["T1"] = iod::matrix_json(C.T1);
  return j;
}

}  // namespace rb3lie
