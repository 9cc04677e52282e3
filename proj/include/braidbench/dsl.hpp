#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "braidbench/grcat.hpp"

namespace braidbench {

/// Parse or evaluation failure; the message carries line:column positions.
struct dsl_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Abstract syntax for morphism terms.
///
///   expr := term ('.' term)*          composition, right-to-left
///   term := atom ('*' atom)*          tensor product
///   atom := NAME ('[' name,... ']')?  generator or generator family
///         | 'id' '[' name ('*' name)* ']'
///         | '(' expr ')'
struct Expr {
  enum class Kind { Compose, Tensor, Gen, Id };
  Kind kind = Kind::Gen;
  std::vector<std::shared_ptr<const Expr>> children;  // Compose, Tensor
  std::string name;                                   // Gen
  std::vector<std::string> args;                      // Gen family / Id parts
  unsigned line = 0, col = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(const std::string& text);
std::string print_expr(const ExprPtr& e);

/// A named binding file: '#' starts a comment, each stanza is
/// `name := expr` (the expression may continue over several lines).
struct DslFile {
  std::vector<std::pair<std::string, ExprPtr>> bindings;
};

DslFile parse_file(const std::string& text);
DslFile load_file(const std::string& path);

/// Evaluation environment: named objects, named morphisms, and parameterized
/// generator families taking resolved objects as arguments. The families
/// id, br, brinv, ev, coev, rev, rcoev are installed by make_env.
class Env {
 public:
  explicit Env(unsigned n) : n_(n) {}

  unsigned order() const { return n_; }
  void def_object(const std::string& name, GrObject x);
  void def_morphism(const std::string& name, GrMorphism f);
  void def_family(
      const std::string& name,
      std::function<GrMorphism(const std::vector<GrObject>&)> family);

  bool has_morphism(const std::string& name) const;
  const GrObject& object(const std::string& name) const;
  const GrMorphism& morphism(const std::string& name) const;

  GrMorphism eval(const ExprPtr& e) const;
  GrMorphism eval(const std::string& text) const;

  /// Evaluate bindings in order, defining each as a named morphism.
  void load(const DslFile& file);

 private:
  GrObject resolve_obj(const std::vector<std::string>& names, unsigned line,
                       unsigned col) const;

  unsigned n_;
  std::map<std::string, GrObject> objects_;
  std::map<std::string, GrMorphism> morphisms_;
  std::map<std::string,
           std::function<GrMorphism(const std::vector<GrObject>&)>>
      families_;
};

Env make_env(unsigned n);

}  // namespace braidbench
