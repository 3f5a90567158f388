// SPDX-License-Identifier: Apache-2.0
#pragma once

// Text format: one record per line, whitespace separated, '#' starts a comment.
//
//   hopfcat 1
//   kind hopf-category
//   field q
//   objects 1 2
//   dim 1 2 1
//   mult 1 2 2 0 0 0 1
//
// Map records list the object labels, then the source indices, then the
// target indices, then the coefficient. Omitted coefficients are zero.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopfcat/dual.hpp"
#include "hopfcat/duoidal.hpp"
#include "hopfcat/fundamental.hpp"
#include "hopfcat/graded.hpp"
#include "hopfcat/groupoid.hpp"
#include "hopfcat/hopf_category.hpp"
#include "hopfcat/modules.hpp"
#include "hopfcat/weak_hopf.hpp"

namespace hopfcat {

enum class Kind {
  hopf_category,
  dual_hopf_category,
  weak_hopf,
  groupoid,
  graded_hopf,
  module,
  comodule,
  hopf_module,
  bimonoid,
};

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::hopf_category: return "hopf-category";
    case Kind::dual_hopf_category: return "dual-hopf-category";
    case Kind::weak_hopf: return "weak-hopf";
    case Kind::groupoid: return "groupoid";
    case Kind::graded_hopf: return "graded-hopf";
    case Kind::module: return "module";
    case Kind::comodule: return "comodule";
    case Kind::hopf_module: return "hopf-module";
    case Kind::bimonoid: return "bimonoid";
  }
  return "?";
}

inline std::optional<Kind> parse_kind(std::string_view s) {
  for (Kind k : {Kind::hopf_category, Kind::dual_hopf_category, Kind::weak_hopf, Kind::groupoid,
                 Kind::graded_hopf, Kind::module, Kind::comodule, Kind::hopf_module, Kind::bimonoid}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

struct GroupoidFile {
  Field field;
  Groupoid groupoid;
};

/// Module-like files name their base structure; `base_name` is the path as
/// written in the file, `base` the loaded structure.
struct ModuleFile {
  std::string base_name;
  HopfCategory base;
  ModuleData data;
};

struct ComoduleFile {
  std::string base_name;
  DualHopfCategory base;
  ComoduleData data;
};

struct HopfModuleFile {
  std::string base_name;
  HopfCategory base;
  HopfModuleData data;
};

using Document = std::variant<HopfCategory, DualHopfCategory, WeakHopf, GroupoidFile, GradedHopf, ModuleFile,
                              ComoduleFile, HopfModuleFile, BimonoidData>;

inline Kind kind_of(const Document& d) { return static_cast<Kind>(d.index()); }

inline constexpr int format_version = 1;

namespace format {

// ---------------------------------------------------------------- writing

class Writer {
 public:
  void line(const std::vector<std::string>& tokens) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) out_ << ' ';
      out_ << tokens[i];
    }
    out_ << '\n';
  }

  void header(Kind k, Field f) {
    line({"hopfcat", std::to_string(format_version)});
    line({"kind", to_string(k)});
    line({"field", f.to_string()});
  }

  void labels(const char* key, const std::vector<std::string>& names) {
    std::vector<std::string> t{key};
    for (const auto& n : names) {
      if (n.empty() || n.find_first_of(" \t\r\n#") != std::string::npos) {
        throw MalformedData("label '" + n + "' cannot be written");
      }
      t.push_back(n);
    }
    line(t);
  }

  /// Nonzero entries of m, source multi-index before target multi-index.
  void map(const std::string& key, const std::vector<std::string>& prefix, const LinMap& m,
           const std::vector<std::size_t>& source, const std::vector<std::size_t>& target) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        const Scalar& v = m(r, c);
        if (v.is_zero()) continue;
        std::vector<std::string> t{key};
        t.insert(t.end(), prefix.begin(), prefix.end());
        append_index(t, c, source);
        append_index(t, r, target);
        t.push_back(v.to_string());
        line(t);
      }
    }
  }

  std::string str() const { return out_.str(); }

 private:
  static void append_index(std::vector<std::string>& t, std::size_t flat, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
      idx[i] = flat % dims[i];
      flat /= dims[i];
    }
    for (auto v : idx) t.push_back(std::to_string(v));
  }

  std::ostringstream out_;
};

inline void write_dims(Writer& w, const ObjectSet& ob, const std::vector<std::size_t>& dims) {
  const std::size_t n = ob.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) w.line({"dim", ob.label(x), ob.label(y), std::to_string(dims[x * n + y])});
}

inline std::string write_hopf(const HopfCategory& a) {
  a.check_shapes();
  Writer w;
  const auto& ob = a.objects();
  const std::size_t n = a.size();
  w.header(Kind::hopf_category, a.field());
  w.labels("objects", ob.labels());
  w.line({"has-antipode", a.has_antipode() ? "yes" : "no"});
  write_dims(w, ob, a.dims());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        w.map("mult", ob.tuple({x, y, z}), a.mult(x, y, z), {a.dim(x, y), a.dim(y, z)}, {a.dim(x, z)});
  for (std::size_t x = 0; x < n; ++x) w.map("unit", ob.tuple({x}), a.unit(x), {}, {a.dim(x, x)});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      w.map("comult", ob.tuple({x, y}), a.comult(x, y), {a.dim(x, y)}, {a.dim(x, y), a.dim(x, y)});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) w.map("counit", ob.tuple({x, y}), a.counit(x, y), {a.dim(x, y)}, {});
  if (a.has_antipode()) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        w.map("antipode", ob.tuple({x, y}), a.antipode(x, y), {a.dim(x, y)}, {a.dim(y, x)});
  }
  return w.str();
}

inline std::string write_dual(const DualHopfCategory& c) {
  c.check_shapes();
  Writer w;
  const auto& ob = c.objects();
  const std::size_t n = c.size();
  w.header(Kind::dual_hopf_category, c.field());
  w.labels("objects", ob.labels());
  w.line({"has-antipode", c.has_antipode() ? "yes" : "no"});
  write_dims(w, ob, c.dims());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      w.map("mult", ob.tuple({x, y}), c.mult(x, y), {c.dim(x, y), c.dim(x, y)}, {c.dim(x, y)});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) w.map("unit", ob.tuple({x, y}), c.unit(x, y), {}, {c.dim(x, y)});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        w.map("cocomp", ob.tuple({x, y, z}), c.cocomp(x, y, z), {c.dim(x, z)}, {c.dim(x, y), c.dim(y, z)});
  for (std::size_t x = 0; x < n; ++x) w.map("counit", ob.tuple({x}), c.counit(x), {c.dim(x, x)}, {});
  if (c.has_antipode()) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        w.map("antipode", ob.tuple({x, y}), c.antipode(x, y), {c.dim(y, x)}, {c.dim(x, y)});
  }
  return w.str();
}

inline std::string write_weak(const WeakHopf& h) {
  h.check_shapes();
  Writer w;
  const std::size_t t = h.total;
  w.header(Kind::weak_hopf, h.field);
  w.labels("objects", h.objects.labels());
  for (const auto& b : h.blocks) {
    w.line({"block", h.objects.label(b.x), h.objects.label(b.y), std::to_string(b.offset),
            std::to_string(b.length)});
  }
  w.map("mult", {}, h.mult, {t, t}, {t});
  w.map("unit", {}, h.unit, {}, {t});
  w.map("comult", {}, h.comult, {t}, {t, t});
  w.map("counit", {}, h.counit, {t}, {});
  w.map("antipode", {}, h.antipode, {t}, {t});
  return w.str();
}

inline std::string write_groupoid(const GroupoidFile& file) {
  const Groupoid& g = file.groupoid;
  Writer w;
  const auto& ob = g.objects;
  w.header(Kind::groupoid, file.field);
  w.labels("objects", ob.labels());
  std::vector<std::string> ids;
  for (const auto& m : g.morphisms) ids.push_back(m.id);
  w.labels("morphisms", ids);
  for (const auto& m : g.morphisms) w.line({"hom", m.id, ob.label(m.source), ob.label(m.target)});
  for (std::size_t x = 0; x < g.identity.size(); ++x) w.line({"identity", ob.label(x), ids.at(g.identity[x])});
  for (const auto& [gh, c] : g.compose) w.line({"compose", ids.at(gh.first), ids.at(gh.second), ids.at(c)});
  for (const auto& [m, i] : g.inverse) w.line({"inverse", ids.at(m), ids.at(i)});
  return w.str();
}

inline std::string write_graded(const GradedHopf& h) {
  Writer w;
  const Group& g = h.group;
  const std::size_t n = g.size();
  w.header(Kind::graded_hopf, h.field);
  w.labels("elements", g.elements());
  w.line({"has-antipode", h.antipode ? "yes" : "no"});
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) w.line({"table", g.elements()[s], g.elements()[t], g.elements()[g.mul(s, t)]});
  for (std::size_t s = 0; s < n; ++s) w.line({"dim", g.elements()[s], std::to_string(h.dims[s])});
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      w.map("mult", {g.elements()[s], g.elements()[t]}, h.m(s, t), {h.dims[s], h.dims[t]}, {h.dims[g.mul(s, t)]});
  w.map("unit", {}, h.unit, {}, {h.dims[g.identity()]});
  for (std::size_t s = 0; s < n; ++s) w.map("comult", {g.elements()[s]}, h.comult[s], {h.dims[s]}, {h.dims[s], h.dims[s]});
  for (std::size_t s = 0; s < n; ++s) w.map("counit", {g.elements()[s]}, h.counit[s], {h.dims[s]}, {});
  if (h.antipode) {
    for (std::size_t s = 0; s < n; ++s)
      w.map("antipode", {g.elements()[s]}, (*h.antipode)[s], {h.dims[s]}, {h.dims[g.inv(s)]});
  }
  return w.str();
}

inline std::string write_module(const ModuleFile& file) {
  const ModuleData& m = file.data;
  const HopfCategory& a = file.base;
  detail::check_module_shapes(a, m);
  Writer w;
  const auto& ob = m.objects();
  const std::size_t n = m.size();
  w.header(Kind::module, m.field());
  w.line({"base", file.base_name});
  w.line({"side", m.side() == Side::left ? "left" : "right"});
  w.labels("objects", ob.labels());
  write_dims(w, ob, m.dims());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::vector<std::size_t> src = m.side() == Side::right
                                                 ? std::vector<std::size_t>{m.dim(x, y), a.dim(y, z)}
                                                 : std::vector<std::size_t>{a.dim(x, y), m.dim(y, z)};
        w.map("action", ob.tuple({x, y, z}), m.action(x, y, z), src, {m.dim(x, z)});
      }
  return w.str();
}

inline std::string write_comodule(const ComoduleFile& file) {
  const ComoduleData& m = file.data;
  const DualHopfCategory& c = file.base;
  detail::check_comodule_shapes(c, m);
  Writer w;
  const auto& ob = m.objects();
  const std::size_t n = m.size();
  w.header(Kind::comodule, m.field());
  w.line({"base", file.base_name});
  w.labels("objects", ob.labels());
  write_dims(w, ob, m.dims());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        w.map("coaction", ob.tuple({x, y, z}), m.coaction(x, y, z), {m.dim(x, z)}, {m.dim(x, y), c.dim(y, z)});
  return w.str();
}

inline std::string write_hopf_module(const HopfModuleFile& file) {
  const HopfModuleData& m = file.data;
  const HopfCategory& a = file.base;
  detail::check_hopf_module_shapes(a, m);
  Writer w;
  const auto& ob = m.objects();
  const std::size_t n = m.size();
  w.header(Kind::hopf_module, m.field());
  w.line({"base", file.base_name});
  w.labels("objects", ob.labels());
  write_dims(w, ob, m.dims());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        w.map("action", ob.tuple({x, y, z}), m.action(x, y, z), {m.dim(x, y), a.dim(y, z)}, {m.dim(x, z)});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      w.map("coaction", ob.tuple({x, y}), m.coaction(x, y), {m.dim(x, y)}, {m.dim(x, y), a.dim(x, y)});
  return w.str();
}

inline std::string write_bimonoid(const BimonoidData& b) {
  b.check_shapes();
  Writer w;
  const MkXObject& a = b.carrier;
  const auto& ob = a.objects;
  const std::size_t n = a.size();
  const MkXObject aa = white_tensor(a, a);
  w.header(Kind::bimonoid, b.field);
  w.labels("objects", ob.labels());
  write_dims(w, ob, a.dims);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t p = x * n + y, d = a.dim(x, y);
      w.map("mu", ob.tuple({x, y}), b.mu[p], {aa.dim(x, y)}, {d});
      w.map("eta", ob.tuple({x, y}), b.eta[p], {}, {d});
      w.map("delta", ob.tuple({x, y}), b.delta[p], {d}, {d, d});
      w.map("eps", ob.tuple({x, y}), b.eps[p], {d}, {});
    }
  }
  return w.str();
}

// ---------------------------------------------------------------- reading

struct Line {
  std::size_t no = 0;
  std::vector<std::string> tok;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view raw = text.substr(start, end - start);
    ++no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line l{no, {}};
    std::istringstream in{std::string(raw)};
    for (std::string t; in >> t;) l.tok.push_back(t);
    if (!l.tok.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

inline std::size_t parse_count(const Line& l, std::size_t pos, std::size_t bound, const char* what) {
  const std::string& t = l.tok.at(pos);
  if (t.empty() || t.size() > 9 || t.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(std::string("bad ") + what + " '" + t + "'", l.no);
  }
  const std::size_t v = std::stoul(t);
  if (v >= bound) {
    throw ParseError(std::string(what) + " " + t + " out of range (bound " + std::to_string(bound) + ")", l.no);
  }
  return v;
}

/// Records grouped by keyword; every keyword must be consumed.
class Body {
 public:
  explicit Body(std::vector<Line> lines) {
    for (auto& l : lines) by_key_[l.tok[0]].push_back(std::move(l));
  }

  std::vector<Line> take(const std::string& key) {
    auto it = by_key_.find(key);
    if (it == by_key_.end()) return {};
    std::vector<Line> out = std::move(it->second);
    by_key_.erase(it);
    return out;
  }

  std::optional<Line> single(const std::string& key) {
    auto v = take(key);
    if (v.empty()) return std::nullopt;
    if (v.size() > 1) throw ParseError("duplicate '" + key + "' record", v[1].no);
    return v[0];
  }

  Line required(const std::string& key, std::size_t fallback_line) {
    auto l = single(key);
    if (!l) throw ParseError("missing '" + key + "' record", fallback_line);
    return *l;
  }

  void finish(Kind k) const {
    for (const auto& [key, lines] : by_key_) {
      throw ParseError("record '" + key + "' is not valid in a " + to_string(k) + " file", lines[0].no);
    }
  }

 private:
  std::map<std::string, std::vector<Line>> by_key_;
};

class Reader {
 public:
  Reader(Field file, Field target) : file_(file), target_(target) {}

  Field field() const noexcept { return target_; }

  Scalar value(const Line& l, const std::string& t) const {
    try {
      return Scalar::parse(file_, t).reduce(target_);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), l.no);
    } catch (const std::domain_error& e) {
      throw ParseError(e.what(), l.no);
    }
  }

  static void arity(const Line& l, std::size_t n) {
    if (l.tok.size() != n) {
      throw ParseError("'" + l.tok[0] + "' expects " + std::to_string(n - 1) + " fields, got " +
                           std::to_string(l.tok.size() - 1),
                       l.no);
    }
  }

  static std::size_t label(const Line& l, std::size_t pos, const std::vector<std::string>& names,
                           const char* what) {
    const std::string& t = l.tok.at(pos);
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == t) return i;
    throw ParseError(std::string("undeclared ") + what + " '" + t + "'", l.no);
  }

  /// Fills one map from records `key labels... src... tgt... value`. The
  /// callback resolves the labels to a target map and its factor dimensions.
  using Resolve = std::function<LinMap&(const std::vector<std::size_t>& ids, std::vector<std::size_t>& source,
                                        std::vector<std::size_t>& target)>;

  void fill(const std::vector<Line>& lines, std::size_t nlabels, const std::vector<std::string>& names,
            std::size_t nsrc, std::size_t ntgt, const Resolve& resolve, const char* what = "object") {
    std::set<std::vector<std::string>> seen;
    for (const Line& l : lines) {
      arity(l, 1 + nlabels + nsrc + ntgt + 1);
      if (!seen.insert({l.tok.begin(), l.tok.end() - 1}).second) throw ParseError("duplicate entry", l.no);
      std::vector<std::size_t> ids;
      for (std::size_t i = 0; i < nlabels; ++i) ids.push_back(label(l, 1 + i, names, what));
      std::vector<std::size_t> src, tgt;
      LinMap& m = resolve(ids, src, tgt);
      std::size_t col = 0, row = 0, pos = 1 + nlabels;
      for (auto d : src) col = col * d + parse_count(l, pos++, d, "index");
      for (auto d : tgt) row = row * d + parse_count(l, pos++, d, "index");
      m.at(row, col) = value(l, l.tok.back());
    }
  }

 private:
  Field file_;
  Field target_;
};

inline std::vector<std::string> read_labels(Body& body, const char* key, std::size_t fallback) {
  const Line l = body.required(key, fallback);
  std::vector<std::string> names(l.tok.begin() + 1, l.tok.end());
  std::set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size()) throw ParseError(std::string("duplicate name in '") + key + "'", l.no);
  return names;
}

inline std::vector<std::size_t> read_dims(Body& body, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  std::vector<std::size_t> dims(n * n, 0);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Line& l : body.take("dim")) {
    Reader::arity(l, 4);
    const auto x = Reader::label(l, 1, names, "object");
    const auto y = Reader::label(l, 2, names, "object");
    if (!seen.insert({x, y}).second) throw ParseError("duplicate entry", l.no);
    dims[x * n + y] = parse_count(l, 3, 1u << 20, "dimension");
  }
  return dims;
}

inline bool read_flag(Body& body, const char* key, std::size_t fallback) {
  const Line l = body.required(key, fallback);
  Reader::arity(l, 2);
  if (l.tok[1] == "yes") return true;
  if (l.tok[1] == "no") return false;
  throw ParseError(std::string("'") + key + "' must be yes or no", l.no);
}

using BaseLoader = std::function<Document(const std::string& name)>;

inline HopfCategory read_hopf(Body& body, Reader& rd, std::size_t hl) {
  const auto names = read_labels(body, "objects", hl);
  const bool anti = read_flag(body, "has-antipode", hl);
  HopfCategory a(rd.field(), ObjectSet(names), read_dims(body, names));
  if (anti) a.add_antipode();
  rd.fill(body.take("mult"), 3, names, 2, 1, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {a.dim(o[0], o[1]), a.dim(o[1], o[2])};
    t = {a.dim(o[0], o[2])};
    return a.mult(o[0], o[1], o[2]);
  });
  rd.fill(body.take("unit"), 1, names, 0, 1, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {};
    t = {a.dim(o[0], o[0])};
    return a.unit(o[0]);
  });
  rd.fill(body.take("comult"), 2, names, 1, 2, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {a.dim(o[0], o[1])};
    t = {s[0], s[0]};
    return a.comult(o[0], o[1]);
  });
  rd.fill(body.take("counit"), 2, names, 1, 0, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {a.dim(o[0], o[1])};
    t = {};
    return a.counit(o[0], o[1]);
  });
  const auto anti_lines = body.take("antipode");
  if (!anti && !anti_lines.empty()) throw ParseError("antipode entries in a file without antipode", anti_lines[0].no);
  rd.fill(anti_lines, 2, names, 1, 1, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {a.dim(o[0], o[1])};
    t = {a.dim(o[1], o[0])};
    return a.antipode(o[0], o[1]);
  });
  return a;
}

inline DualHopfCategory read_dual(Body& body, Reader& rd, std::size_t hl) {
  const auto names = read_labels(body, "objects", hl);
  const bool anti = read_flag(body, "has-antipode", hl);
  DualHopfCategory c(rd.field(), ObjectSet(names), read_dims(body, names));
  if (anti) c.add_antipode();
  rd.fill(body.take("mult"), 2, names, 2, 1, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    const std::size_t d = c.dim(o[0], o[1]);
    s = {d, d};
    t = {d};
    return c.mult(o[0], o[1]);
  });
  rd.fill(body.take("unit"), 2, names, 0, 1, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {};
    t = {c.dim(o[0], o[1])};
    return c.unit(o[0], o[1]);
  });
  rd.fill(body.take("cocomp"), 3, names, 1, 2, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {c.dim(o[0], o[2])};
    t = {c.dim(o[0], o[1]), c.dim(o[1], o[2])};
    return c.cocomp(o[0], o[1], o[2]);
  });
  rd.fill(body.take("counit"), 1, names, 1, 0, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {c.dim(o[0], o[0])};
    t = {};
    return c.counit(o[0]);
  });
  const auto anti_lines = body.take("antipode");
  if (!anti && !anti_lines.empty()) throw ParseError("antipode entries in a file without antipode", anti_lines[0].no);
  rd.fill(anti_lines, 2, names, 1, 1, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {c.dim(o[1], o[0])};
    t = {c.dim(o[0], o[1])};
    return c.antipode(o[0], o[1]);
  });
  return c;
}

inline WeakHopf read_weak(Body& body, Reader& rd, std::size_t hl) {
  const auto names = read_labels(body, "objects", hl);
  std::vector<Block> blocks;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t next = 0;
  for (const Line& l : body.take("block")) {
    Reader::arity(l, 5);
    Block b;
    b.x = Reader::label(l, 1, names, "object");
    b.y = Reader::label(l, 2, names, "object");
    if (!seen.insert({b.x, b.y}).second) throw ParseError("duplicate block", l.no);
    b.offset = parse_count(l, 3, 1u << 20, "offset");
    b.length = parse_count(l, 4, 1u << 20, "length");
    if (b.offset != next) throw ParseError("blocks must tile the basis in order", l.no);
    next += b.length;
    blocks.push_back(b);
  }
  WeakHopf h(rd.field(), ObjectSet(names), blocks);
  const std::size_t t = h.total;
  auto fixed = [&](LinMap& m, std::vector<std::size_t> src, std::vector<std::size_t> tgt) {
    return [&m, src, tgt](const auto&, auto& s, auto& g) -> LinMap& {
      s = src;
      g = tgt;
      return m;
    };
  };
  rd.fill(body.take("mult"), 0, names, 2, 1, fixed(h.mult, {t, t}, {t}));
  rd.fill(body.take("unit"), 0, names, 0, 1, fixed(h.unit, {}, {t}));
  rd.fill(body.take("comult"), 0, names, 1, 2, fixed(h.comult, {t}, {t, t}));
  rd.fill(body.take("counit"), 0, names, 1, 0, fixed(h.counit, {t}, {}));
  rd.fill(body.take("antipode"), 0, names, 1, 1, fixed(h.antipode, {t}, {t}));
  return h;
}

inline GroupoidFile read_groupoid(Body& body, Reader& rd, std::size_t hl) {
  const auto names = read_labels(body, "objects", hl);
  const auto ids = read_labels(body, "morphisms", hl);
  Groupoid g;
  g.objects = ObjectSet(names);
  g.morphisms.resize(ids.size());
  std::vector<bool> placed(ids.size(), false);
  for (const Line& l : body.take("hom")) {
    Reader::arity(l, 4);
    const auto m = Reader::label(l, 1, ids, "morphism");
    if (placed[m]) throw ParseError("duplicate entry", l.no);
    placed[m] = true;
    g.morphisms[m] = {ids[m], Reader::label(l, 2, names, "object"), Reader::label(l, 3, names, "object")};
  }
  for (std::size_t m = 0; m < ids.size(); ++m) {
    if (!placed[m]) throw ParseError("morphism '" + ids[m] + "' has no 'hom' record", hl);
  }
  g.identity.assign(names.size(), 0);
  std::vector<bool> has_id(names.size(), false);
  for (const Line& l : body.take("identity")) {
    Reader::arity(l, 3);
    const auto x = Reader::label(l, 1, names, "object");
    if (has_id[x]) throw ParseError("duplicate entry", l.no);
    has_id[x] = true;
    g.identity[x] = Reader::label(l, 2, ids, "morphism");
  }
  for (std::size_t x = 0; x < names.size(); ++x) {
    if (!has_id[x]) throw ParseError("object '" + names[x] + "' has no identity", hl);
  }
  for (const Line& l : body.take("compose")) {
    Reader::arity(l, 4);
    const auto a = Reader::label(l, 1, ids, "morphism");
    const auto b = Reader::label(l, 2, ids, "morphism");
    if (!g.compose.emplace(std::pair{a, b}, Reader::label(l, 3, ids, "morphism")).second) {
      throw ParseError("duplicate entry", l.no);
    }
  }
  for (const Line& l : body.take("inverse")) {
    Reader::arity(l, 3);
    const auto a = Reader::label(l, 1, ids, "morphism");
    if (!g.inverse.emplace(a, Reader::label(l, 2, ids, "morphism")).second) throw ParseError("duplicate entry", l.no);
  }
  return {rd.field(), std::move(g)};
}

inline GradedHopf read_graded(Body& body, Reader& rd, std::size_t hl) {
  const auto names = read_labels(body, "elements", hl);
  const bool anti = read_flag(body, "has-antipode", hl);
  const std::size_t n = names.size();
  std::vector<std::size_t> table(n * n);
  std::vector<bool> set(n * n, false);
  for (const Line& l : body.take("table")) {
    Reader::arity(l, 4);
    const auto s = Reader::label(l, 1, names, "element");
    const auto t = Reader::label(l, 2, names, "element");
    if (set[s * n + t]) throw ParseError("duplicate entry", l.no);
    set[s * n + t] = true;
    table[s * n + t] = Reader::label(l, 3, names, "element");
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (!set[i]) throw ParseError("group table incomplete at (" + names[i / n] + "," + names[i % n] + ")", hl);
  }
  std::vector<std::size_t> dims(n, 0);
  std::vector<bool> seen(n, false);
  for (const Line& l : body.take("dim")) {
    Reader::arity(l, 3);
    const auto s = Reader::label(l, 1, names, "element");
    if (seen[s]) throw ParseError("duplicate entry", l.no);
    seen[s] = true;
    dims[s] = parse_count(l, 2, 1u << 20, "dimension");
  }
  Group group = [&] {
    try {
      return Group(names, table);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), hl);
    }
  }();
  GradedHopf h(rd.field(), group, dims);
  if (anti) h.add_antipode();
  const Group& g = h.group;
  rd.fill(body.take("mult"), 2, names, 2, 1, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {dims[o[0]], dims[o[1]]};
    t = {dims[g.mul(o[0], o[1])]};
    return h.m(o[0], o[1]);
  }, "element");
  rd.fill(body.take("unit"), 0, names, 0, 1, [&](const auto&, auto& s, auto& t) -> LinMap& {
    s = {};
    t = {dims[g.identity()]};
    return h.unit;
  }, "element");
  rd.fill(body.take("comult"), 1, names, 1, 2, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {dims[o[0]]};
    t = {dims[o[0]], dims[o[0]]};
    return h.comult[o[0]];
  }, "element");
  rd.fill(body.take("counit"), 1, names, 1, 0, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {dims[o[0]]};
    t = {};
    return h.counit[o[0]];
  }, "element");
  const auto anti_lines = body.take("antipode");
  if (!anti && !anti_lines.empty()) throw ParseError("antipode entries in a file without antipode", anti_lines[0].no);
  rd.fill(anti_lines, 1, names, 1, 1, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {dims[o[0]]};
    t = {dims[g.inv(o[0])]};
    return (*h.antipode)[o[0]];
  }, "element");
  return h;
}

template <class Base>
Base load_base(Body& body, const BaseLoader& load, Kind want, std::string& name, std::size_t hl) {
  const Line l = body.required("base", hl);
  Reader::arity(l, 2);
  name = l.tok[1];
  if (!load) throw ParseError("no way to resolve base '" + name + "'", l.no);
  Document d = load(name);
  if (kind_of(d) != want) {
    throw ParseError("base '" + name + "' is a " + to_string(kind_of(d)) + ", expected " + to_string(want), l.no);
  }
  return std::get<Base>(std::move(d));
}

inline void same_objects(const ObjectSet& base, const std::vector<std::string>& names, std::size_t hl) {
  if (base.labels() != names) throw ParseError("objects differ from the base structure's objects", hl);
}

inline ModuleFile read_module(Body& body, Reader& rd, const BaseLoader& load, std::size_t hl) {
  ModuleFile file;
  file.base = load_base<HopfCategory>(body, load, Kind::hopf_category, file.base_name, hl);
  const Line sl = body.required("side", hl);
  Reader::arity(sl, 2);
  if (sl.tok[1] != "left" && sl.tok[1] != "right") throw ParseError("side must be left or right", sl.no);
  const Side side = sl.tok[1] == "left" ? Side::left : Side::right;
  const auto names = read_labels(body, "objects", hl);
  same_objects(file.base.objects(), names, hl);
  const HopfCategory& a = file.base;
  file.data = ModuleData(a, side, read_dims(body, names));
  ModuleData& m = file.data;
  rd.fill(body.take("action"), 3, names, 2, 1, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = side == Side::right ? std::vector<std::size_t>{m.dim(o[0], o[1]), a.dim(o[1], o[2])}
                            : std::vector<std::size_t>{a.dim(o[0], o[1]), m.dim(o[1], o[2])};
    t = {m.dim(o[0], o[2])};
    return m.action(o[0], o[1], o[2]);
  });
  return file;
}

inline ComoduleFile read_comodule(Body& body, Reader& rd, const BaseLoader& load, std::size_t hl) {
  ComoduleFile file;
  file.base = load_base<DualHopfCategory>(body, load, Kind::dual_hopf_category, file.base_name, hl);
  const auto names = read_labels(body, "objects", hl);
  same_objects(file.base.objects(), names, hl);
  const DualHopfCategory& c = file.base;
  file.data = ComoduleData(c, read_dims(body, names));
  ComoduleData& m = file.data;
  rd.fill(body.take("coaction"), 3, names, 1, 2, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {m.dim(o[0], o[2])};
    t = {m.dim(o[0], o[1]), c.dim(o[1], o[2])};
    return m.coaction(o[0], o[1], o[2]);
  });
  return file;
}

inline HopfModuleFile read_hopf_module(Body& body, Reader& rd, const BaseLoader& load, std::size_t hl) {
  HopfModuleFile file;
  file.base = load_base<HopfCategory>(body, load, Kind::hopf_category, file.base_name, hl);
  const auto names = read_labels(body, "objects", hl);
  same_objects(file.base.objects(), names, hl);
  const HopfCategory& a = file.base;
  file.data = HopfModuleData(a, read_dims(body, names));
  HopfModuleData& m = file.data;
  rd.fill(body.take("action"), 3, names, 2, 1, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {m.dim(o[0], o[1]), a.dim(o[1], o[2])};
    t = {m.dim(o[0], o[2])};
    return m.action(o[0], o[1], o[2]);
  });
  rd.fill(body.take("coaction"), 2, names, 1, 2, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {m.dim(o[0], o[1])};
    t = {m.dim(o[0], o[1]), a.dim(o[0], o[1])};
    return m.coaction(o[0], o[1]);
  });
  return file;
}

inline BimonoidData read_bimonoid(Body& body, Reader& rd, std::size_t hl) {
  const auto names = read_labels(body, "objects", hl);
  const Field f = rd.field();
  BimonoidData b{f, MkXObject(ObjectSet(names), read_dims(body, names)), {}, {}, {}, {}};
  const MkXObject& a = b.carrier;
  const MkXObject aa = white_tensor(a, a);
  const MkXObject i = unit_i(a.objects);
  for (std::size_t p = 0; p < a.dims.size(); ++p) {
    const std::size_t d = a.dims[p];
    b.mu.emplace_back(f, d, aa.dims[p]);
    b.eta.emplace_back(f, d, i.dims[p]);
    b.delta.emplace_back(f, d * d, d);
    b.eps.emplace_back(f, 1, d);
  }
  const std::size_t n = names.size();
  rd.fill(body.take("mu"), 2, names, 1, 1, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {aa.dim(o[0], o[1])};
    t = {a.dim(o[0], o[1])};
    return b.mu[o[0] * n + o[1]];
  });
  rd.fill(body.take("eta"), 2, names, 0, 1, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {};
    t = {a.dim(o[0], o[1])};
    LinMap& m = b.eta[o[0] * n + o[1]];
    if (m.cols() == 0) t = {0};
    return m;
  });
  rd.fill(body.take("delta"), 2, names, 1, 2, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {a.dim(o[0], o[1])};
    t = {s[0], s[0]};
    return b.delta[o[0] * n + o[1]];
  });
  rd.fill(body.take("eps"), 2, names, 1, 0, [&](const auto& o, auto& s, auto& t) -> LinMap& {
    s = {a.dim(o[0], o[1])};
    t = {};
    return b.eps[o[0] * n + o[1]];
  });
  return b;
}

}  // namespace format

/// Canonical text of a document: declared object order, entries sorted
/// lexicographically, zero coefficients omitted.
inline std::string write_document(const Document& d) {
  using namespace format;
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HopfCategory>) return write_hopf(v);
        else if constexpr (std::is_same_v<T, DualHopfCategory>) return write_dual(v);
        else if constexpr (std::is_same_v<T, WeakHopf>) return write_weak(v);
        else if constexpr (std::is_same_v<T, GroupoidFile>) return write_groupoid(v);
        else if constexpr (std::is_same_v<T, GradedHopf>) return write_graded(v);
        else if constexpr (std::is_same_v<T, ModuleFile>) return write_module(v);
        else if constexpr (std::is_same_v<T, ComoduleFile>) return write_comodule(v);
        else if constexpr (std::is_same_v<T, HopfModuleFile>) return write_hopf_module(v);
        else return write_bimonoid(v);
      },
      d);
}

struct ReadOptions {
  std::optional<Field> field;   // rational files may be reduced into F_p
  format::BaseLoader load_base;  // resolves `base` records
};

inline Document read_document(std::string_view text, const ReadOptions& opt = {}) {
  using namespace format;
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty file", 1);
  const Line& v = lines[0];
  if (v.tok[0] != "hopfcat" || v.tok.size() != 2) throw ParseError("expected 'hopfcat <version>' header", v.no);
  if (v.tok[1] != std::to_string(format_version)) throw ParseError("unsupported format version " + v.tok[1], v.no);
  if (lines.size() < 3 || lines[1].tok[0] != "kind" || lines[1].tok.size() != 2) {
    throw ParseError("expected 'kind <kind>' on the second record", lines.size() > 1 ? lines[1].no : v.no);
  }
  const auto kind = parse_kind(lines[1].tok[1]);
  if (!kind) throw ParseError("unknown kind '" + lines[1].tok[1] + "'", lines[1].no);
  const Line& fl = lines[2];
  if (fl.tok[0] != "field" || fl.tok.size() != 2) throw ParseError("expected 'field <q|fp:p>' on the third record", fl.no);
  Field file_field;
  try {
    file_field = Field::parse(fl.tok[1]);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), fl.no);
  }
  const Field target = opt.field.value_or(file_field);
  if (target != file_field && !file_field.is_rational()) {
    throw ParseError("cannot read a " + file_field.to_string() + " file over " + target.to_string(), fl.no);
  }
  const std::size_t hl = fl.no;
  Body body(std::vector<Line>(lines.begin() + 3, lines.end()));
  Reader rd(file_field, target);
  Document out = [&]() -> Document {
    try {
      switch (*kind) {
        case Kind::hopf_category: return read_hopf(body, rd, hl);
        case Kind::dual_hopf_category: return read_dual(body, rd, hl);
        case Kind::weak_hopf: return read_weak(body, rd, hl);
        case Kind::groupoid: return read_groupoid(body, rd, hl);
        case Kind::graded_hopf: return read_graded(body, rd, hl);
        case Kind::module: return read_module(body, rd, opt.load_base, hl);
        case Kind::comodule: return read_comodule(body, rd, opt.load_base, hl);
        case Kind::hopf_module: return read_hopf_module(body, rd, opt.load_base, hl);
        case Kind::bimonoid: return read_bimonoid(body, rd, hl);
      }
    } catch (const MalformedData& e) {
      throw ParseError(e.what(), hl);
    }
    throw ParseError("unhandled kind", hl);
  }();
  body.finish(*kind);
  return out;
}

inline std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Reads a file; `base` records resolve relative to its directory.
inline Document load_document(const std::filesystem::path& path, std::optional<Field> field = std::nullopt) {
  ReadOptions opt;
  opt.field = field;
  const auto dir = path.parent_path();
  opt.load_base = [dir, field](const std::string& name) { return load_document(dir / name, field); };
  return read_document(read_text_file(path), opt);
}

}  // namespace hopfcat
