#pragma once

// Composite points built from catalog centers, e.g. the midpoint of the
// incenter and orthocenter or the isogonal conjugate of the mittenpunkt
// with respect to the excentral triangle. Expressions print and parse in a
// small function-call syntax:
//
//   X1  |  midpoint(X1,X4)  |  isogonal(Excentral,X9)  |  center(Medial,X20)
//   reflect(P,Center)  complement(P)  anticomplement(P)  isotomic(Kind,P)
//   vertex(Kind,1..3)  antipode(Kind,1..3)

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricurve/centers.hpp"

namespace tricurve {

class CenterExpr {
 public:
  enum class Op {
    Catalog,
    MidpointOf,
    ReflectThrough,
    Complement,
    Anticomplement,
    IsogonalIn,
    IsotomicIn,
    CenterOf,
    VertexOf,
    AntipodeOf,
  };

  static CenterExpr catalog(CenterId id) { return make(Op::Catalog, id); }
  static CenterExpr midpoint_of(CenterExpr p, CenterExpr q) { return make(Op::MidpointOf, {}, {}, 0, {std::move(p), std::move(q)}); }
  /// Reflection of p through center.
  static CenterExpr reflect_through(CenterExpr p, CenterExpr center) {
    return make(Op::ReflectThrough, {}, {}, 0, {std::move(p), std::move(center)});
  }
  static CenterExpr complement_of(CenterExpr p) { return make(Op::Complement, {}, {}, 0, {std::move(p)}); }
  static CenterExpr anticomplement_of(CenterExpr p) { return make(Op::Anticomplement, {}, {}, 0, {std::move(p)}); }
  static CenterExpr isogonal_in(TriangleKind k, CenterExpr p) { return make(Op::IsogonalIn, {}, k, 0, {std::move(p)}); }
  static CenterExpr isotomic_in(TriangleKind k, CenterExpr p) { return make(Op::IsotomicIn, {}, k, 0, {std::move(p)}); }
  static CenterExpr center_of(TriangleKind k, CenterId id) { return make(Op::CenterOf, id, k); }
  /// index is 0-based.
  static CenterExpr vertex_of(TriangleKind k, std::size_t index) { return make(Op::VertexOf, {}, k, index); }
  static CenterExpr antipode_of(TriangleKind k, std::size_t index) { return make(Op::AntipodeOf, {}, k, index); }

  Op op() const { return node_->op; }
  CenterId id() const { return node_->id; }
  TriangleKind kind() const { return node_->kind; }
  std::size_t index() const { return node_->index; }
  const CenterExpr& arg(std::size_t i) const { return node_->args.at(i); }

  std::string str() const {
    const auto& n = *node_;
    auto kind = std::string(to_string(n.kind));
    switch (n.op) {
      case Op::Catalog: return std::string(tag(n.id));
      case Op::MidpointOf: return "midpoint(" + arg(0).str() + "," + arg(1).str() + ")";
      case Op::ReflectThrough: return "reflect(" + arg(0).str() + "," + arg(1).str() + ")";
      case Op::Complement: return "complement(" + arg(0).str() + ")";
      case Op::Anticomplement: return "anticomplement(" + arg(0).str() + ")";
      case Op::IsogonalIn: return "isogonal(" + kind + "," + arg(0).str() + ")";
      case Op::IsotomicIn: return "isotomic(" + kind + "," + arg(0).str() + ")";
      case Op::CenterOf: return "center(" + kind + "," + std::string(tag(n.id)) + ")";
      case Op::VertexOf: return "vertex(" + kind + "," + std::to_string(n.index + 1) + ")";
      case Op::AntipodeOf: return "antipode(" + kind + "," + std::to_string(n.index + 1) + ")";
    }
    return "?";
  }

 private:
  struct Node {
    Op op;
    CenterId id;
    TriangleKind kind;
    std::size_t index;
    std::vector<CenterExpr> args;
  };

  explicit CenterExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static CenterExpr make(Op op, CenterId id = CenterId::X2, TriangleKind kind = TriangleKind::Base,
                         std::size_t index = 0, std::vector<CenterExpr> args = {}) {
    return CenterExpr(std::make_shared<const Node>(Node{op, id, kind, index, std::move(args)}));
  }

  std::shared_ptr<const Node> node_;
};

inline HomPoint eval_expr(const RefTriangle& t, const CenterExpr& e) {
  using Op = CenterExpr::Op;
  switch (e.op()) {
    case Op::Catalog: return eval_center(t, e.id());
    case Op::MidpointOf: return midpoint(eval_expr(t, e.arg(0)), eval_expr(t, e.arg(1)));
    case Op::ReflectThrough: return reflect(eval_expr(t, e.arg(0)), eval_expr(t, e.arg(1)));
    case Op::Complement: return complement(eval_expr(t, e.arg(0)));
    case Op::Anticomplement: return anticomplement(eval_expr(t, e.arg(0)));
    case Op::IsogonalIn: return isogonal_in(derived_triangle(t, e.kind()), eval_expr(t, e.arg(0)));
    case Op::IsotomicIn: return isotomic_in(derived_triangle(t, e.kind()), eval_expr(t, e.arg(0)));
    case Op::CenterOf: return eval_center_in(derived_triangle(t, e.kind()), e.id());
    case Op::VertexOf: return derived_triangle(t, e.kind()).vertex(e.index());
    case Op::AntipodeOf: return antipode_in(derived_triangle(t, e.kind()), e.index());
  }
  throw Error(ErrorKind::UnknownCenter, e.str());
}

// ---------------------------------------------------------------------------
// Names

/// Short names for the points that appear in the correspondence tables.
inline const std::vector<std::pair<std::string, CenterExpr>>& center_aliases() {
  using E = CenterExpr;
  using K = TriangleKind;
  static const std::vector<std::pair<std::string, CenterExpr>> aliases = {
      {"I", E::catalog(CenterId::X1)},
      {"M", E::catalog(CenterId::X2)},
      {"O", E::catalog(CenterId::X3)},
      {"H", E::catalog(CenterId::X4)},
      {"E", E::catalog(CenterId::X5)},
      {"Sy", E::catalog(CenterId::X6)},
      {"Ge", E::catalog(CenterId::X7)},
      {"Na", E::catalog(CenterId::X8)},
      {"Mi", E::catalog(CenterId::X9)},
      {"Sp", E::catalog(CenterId::X10)},
      {"L", E::catalog(CenterId::X20)},
      {"S", E::catalog(CenterId::X21)},
      {"GOT", E::catalog(CenterId::X25)},
      {"MB", E::catalog(CenterId::X39)},
      {"Be", E::catalog(CenterId::X40)},
      {"K", E::catalog(CenterId::X54)},
      {"LP", E::catalog(CenterId::X64)},
      {"B3", E::catalog(CenterId::X76)},
      {"F", E::catalog(CenterId::X355)},
      {"Ta", E::catalog(CenterId::X389)},
      {"MiP", E::isogonal_in(K::Base, E::catalog(CenterId::X9))},
      {"MiPP", E::isogonal_in(K::Excentral, E::catalog(CenterId::X9))},
      {"BeP", E::isogonal_in(K::Base, E::catalog(CenterId::X40))},
      {"SyA", E::anticomplement_of(E::catalog(CenterId::X6))},
      {"HA", E::isogonal_in(K::Medial, E::center_of(K::Medial, CenterId::X20))},
      {"M_IH", E::midpoint_of(E::catalog(CenterId::X1), E::catalog(CenterId::X4))},
      {"M_MH", E::midpoint_of(E::catalog(CenterId::X2), E::catalog(CenterId::X4))},
      {"M_MiI", E::midpoint_of(E::catalog(CenterId::X9), E::catalog(CenterId::X1))},
  };
  return aliases;
}

inline CenterExpr alias(std::string_view name) {
  for (const auto& [n, e] : center_aliases()) {
    if (n == name) return e;
  }
  throw Error(ErrorKind::UnknownCenter, std::string(name));
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  CenterExpr parse() {
    CenterExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::UnknownCenter, "'" + std::string(text_) + "': " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool peek(char ch) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  TriangleKind kind() {
    const std::string name = ident();
    auto k = triangle_kind_from_string(name);
    if (!k) fail("unknown triangle kind " + name);
    return *k;
  }

  std::size_t index() {
    const std::string n = ident();
    if (n != "1" && n != "2" && n != "3") fail("vertex index must be 1, 2 or 3");
    return static_cast<std::size_t>(n[0] - '1');
  }

  CenterId catalog_id() {
    const std::string name = ident();
    auto id = center_from_tag(name);
    if (!id) fail("unknown catalog center " + name);
    return *id;
  }

  CenterExpr expr() {
    const std::string name = ident();
    if (!peek('(')) {
      if (auto id = center_from_tag(name)) return CenterExpr::catalog(*id);
      for (const auto& [n, e] : center_aliases()) {
        if (n == name) return e;
      }
      fail("unknown center " + name);
    }
    expect('(');
    CenterExpr out = CenterExpr::catalog(CenterId::X2);
    if (name == "midpoint" || name == "reflect") {
      CenterExpr p = expr();
      expect(',');
      CenterExpr q = expr();
      out = name == "midpoint" ? CenterExpr::midpoint_of(p, q) : CenterExpr::reflect_through(p, q);
    } else if (name == "complement") {
      out = CenterExpr::complement_of(expr());
    } else if (name == "anticomplement") {
      out = CenterExpr::anticomplement_of(expr());
    } else if (name == "isogonal" || name == "isotomic") {
      const TriangleKind k = kind();
      expect(',');
      CenterExpr p = expr();
      out = name == "isogonal" ? CenterExpr::isogonal_in(k, p) : CenterExpr::isotomic_in(k, p);
    } else if (name == "center") {
      const TriangleKind k = kind();
      expect(',');
      out = CenterExpr::center_of(k, catalog_id());
    } else if (name == "vertex" || name == "antipode") {
      const TriangleKind k = kind();
      expect(',');
      const std::size_t i = index();
      out = name == "vertex" ? CenterExpr::vertex_of(k, i) : CenterExpr::antipode_of(k, i);
    } else {
      fail("unknown function " + name);
    }
    expect(')');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Accepts catalog tags, the short aliases above, or an expression.
inline CenterExpr parse_center(std::string_view text) { return detail::ExprParser(text).parse(); }

}  // namespace tricurve
