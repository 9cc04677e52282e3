#include "braidbench/dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace braidbench {

namespace {

struct Token {
  enum class Kind { Name, Dot, Star, LParen, RParen, LBracket, RBracket,
                    Comma, Assign, End };
  Kind kind;
  std::string text;
  unsigned line, col;
};

std::string pos(unsigned line, unsigned col) {
  return std::to_string(line) + ":" + std::to_string(col);
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') ++i_;
      } else if (c == '\n') {
        ++line_;
        col_ = 1;
        ++i_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++i_;
      } else {
        break;
      }
    }
    cur_ = {Token::Kind::End, "", line_, col_};
    if (i_ >= text_.size()) return;
    char c = text_[i_];
    cur_.line = line_;
    cur_.col = col_;
    auto single = [&](Token::Kind k) {
      cur_.kind = k;
      cur_.text = std::string(1, c);
      ++i_;
      ++col_;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) ||
              text_[j] == '_'))
        ++j;
      cur_.kind = Token::Kind::Name;
      cur_.text = text_.substr(i_, j - i_);
      col_ += static_cast<unsigned>(j - i_);
      i_ = j;
    } else if (c == '.') {
      single(Token::Kind::Dot);
    } else if (c == '*') {
      single(Token::Kind::Star);
    } else if (c == '(') {
      single(Token::Kind::LParen);
    } else if (c == ')') {
      single(Token::Kind::RParen);
    } else if (c == '[') {
      single(Token::Kind::LBracket);
    } else if (c == ']') {
      single(Token::Kind::RBracket);
    } else if (c == ',') {
      single(Token::Kind::Comma);
    } else if (c == ':' && i_ + 1 < text_.size() && text_[i_ + 1] == '=') {
      cur_.kind = Token::Kind::Assign;
      cur_.text = ":=";
      i_ += 2;
      col_ += 2;
    } else {
      throw dsl_error("dsl: unexpected character '" + std::string(1, c) +
                      "' at " + pos(line_, col_));
    }
  }

  const std::string& text_;
  size_t i_ = 0;
  unsigned line_ = 1, col_ = 1;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ExprPtr parse_expr() {
    auto terms = std::vector<ExprPtr>{parse_term()};
    while (lex_.peek().kind == Token::Kind::Dot) {
      lex_.next();
      terms.push_back(parse_term());
    }
    if (terms.size() == 1) return terms[0];
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Compose;
    e->children = std::move(terms);
    e->line = e->children[0]->line;
    e->col = e->children[0]->col;
    return e;
  }

  void expect_end() {
    if (lex_.peek().kind != Token::Kind::End)
      throw dsl_error("dsl: trailing input at " +
                      pos(lex_.peek().line, lex_.peek().col));
  }

  DslFile parse_file() {
    DslFile out;
    while (lex_.peek().kind != Token::Kind::End) {
      Token name = expect(Token::Kind::Name, "binding name");
      expect(Token::Kind::Assign, "':='");
      out.bindings.emplace_back(name.text, parse_expr());
    }
    return out;
  }

 private:
  Token expect(Token::Kind k, const std::string& what) {
    if (lex_.peek().kind != k)
      throw dsl_error("dsl: expected " + what + " at " +
                      pos(lex_.peek().line, lex_.peek().col) + ", got '" +
                      lex_.peek().text + "'");
    return lex_.next();
  }

  ExprPtr parse_term() {
    auto atoms = std::vector<ExprPtr>{parse_atom()};
    while (lex_.peek().kind == Token::Kind::Star) {
      lex_.next();
      atoms.push_back(parse_atom());
    }
    if (atoms.size() == 1) return atoms[0];
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Tensor;
    e->children = std::move(atoms);
    e->line = e->children[0]->line;
    e->col = e->children[0]->col;
    return e;
  }

  ExprPtr parse_atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::LParen) {
      lex_.next();
      ExprPtr e = parse_expr();
      expect(Token::Kind::RParen, "')'");
      return e;
    }
    Token name = expect(Token::Kind::Name, "a name");
    auto e = std::make_shared<Expr>();
    e->line = name.line;
    e->col = name.col;
    e->name = name.text;
    e->kind = name.text == "id" ? Expr::Kind::Id : Expr::Kind::Gen;
    if (lex_.peek().kind == Token::Kind::LBracket) {
      lex_.next();
      e->args.push_back(expect(Token::Kind::Name, "object name").text);
      if (e->kind == Expr::Kind::Id) {
        while (lex_.peek().kind == Token::Kind::Star) {
          lex_.next();
          e->args.push_back(expect(Token::Kind::Name, "object name").text);
        }
      } else {
        while (lex_.peek().kind == Token::Kind::Comma) {
          lex_.next();
          e->args.push_back(expect(Token::Kind::Name, "object name").text);
        }
      }
      expect(Token::Kind::RBracket, "']'");
    } else if (e->kind == Expr::Kind::Id) {
      throw dsl_error("dsl: 'id' requires an object argument at " +
                      pos(name.line, name.col));
    }
    return e;
  }

  Lexer lex_;
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
  Parser p(text);
  ExprPtr e = p.parse_expr();
  p.expect_end();
  return e;
}

std::string print_expr(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Compose: {
      std::string out;
      for (size_t i = 0; i < e->children.size(); ++i) {
        if (i) out += " . ";
        const auto& c = e->children[i];
        bool paren = c->kind == Expr::Kind::Compose;
        out += paren ? "(" + print_expr(c) + ")" : print_expr(c);
      }
      return out;
    }
    case Expr::Kind::Tensor: {
      std::string out;
      for (size_t i = 0; i < e->children.size(); ++i) {
        if (i) out += " * ";
        const auto& c = e->children[i];
        bool paren =
            c->kind == Expr::Kind::Compose || c->kind == Expr::Kind::Tensor;
        out += paren ? "(" + print_expr(c) + ")" : print_expr(c);
      }
      return out;
    }
    case Expr::Kind::Id: {
      std::string out = "id[";
      for (size_t i = 0; i < e->args.size(); ++i) {
        if (i) out += " * ";
        out += e->args[i];
      }
      return out + "]";
    }
    case Expr::Kind::Gen: {
      std::string out = e->name;
      if (!e->args.empty()) {
        out += "[";
        for (size_t i = 0; i < e->args.size(); ++i) {
          if (i) out += ", ";
          out += e->args[i];
        }
        out += "]";
      }
      return out;
    }
  }
  throw dsl_error("dsl: corrupt expression");
}

DslFile parse_file(const std::string& text) {
  Parser p(text);
  return p.parse_file();
}

DslFile load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dsl_error("dsl: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_file(buf.str());
}

void Env::def_object(const std::string& name, GrObject x) {
  objects_.insert_or_assign(name, std::move(x));
}

void Env::def_morphism(const std::string& name, GrMorphism f) {
  morphisms_.insert_or_assign(name, std::move(f));
}

void Env::def_family(
    const std::string& name,
    std::function<GrMorphism(const std::vector<GrObject>&)> family) {
  families_.insert_or_assign(name, std::move(family));
}

bool Env::has_morphism(const std::string& name) const {
  return morphisms_.count(name) > 0;
}

const GrObject& Env::object(const std::string& name) const {
  auto it = objects_.find(name);
  if (it == objects_.end()) throw dsl_error("dsl: unknown object " + name);
  return it->second;
}

const GrMorphism& Env::morphism(const std::string& name) const {
  auto it = morphisms_.find(name);
  if (it == morphisms_.end()) throw dsl_error("dsl: unknown morphism " + name);
  return it->second;
}

GrObject Env::resolve_obj(const std::vector<std::string>& names, unsigned line,
                          unsigned col) const {
  GrObject out;
  bool first = true;
  for (const auto& nm : names) {
    auto it = objects_.find(nm);
    if (it == objects_.end())
      throw dsl_error("dsl: unknown object " + nm + " at " + pos(line, col));
    out = first ? it->second : tensor_obj(out, it->second);
    first = false;
  }
  return out;
}

GrMorphism Env::eval(const ExprPtr& e) const {
  switch (e->kind) {
    case Expr::Kind::Compose: {
      GrMorphism out = eval(e->children.back());
      for (size_t i = e->children.size() - 1; i-- > 0;) {
        GrMorphism g = eval(e->children[i]);
        if (g.src() != out.dst())
          throw dsl_error("dsl: composition mismatch at " +
                          pos(e->children[i]->line, e->children[i]->col));
        out = compose(g, out);
      }
      return out;
    }
    case Expr::Kind::Tensor: {
      GrMorphism out = eval(e->children[0]);
      for (size_t i = 1; i < e->children.size(); ++i)
        out = tensor_mor(out, eval(e->children[i]));
      return out;
    }
    case Expr::Kind::Id:
      return GrMorphism::identity(resolve_obj(e->args, e->line, e->col));
    case Expr::Kind::Gen: {
      if (e->args.empty()) {
        auto it = morphisms_.find(e->name);
        if (it != morphisms_.end()) return it->second;
        throw dsl_error("dsl: unknown morphism " + e->name + " at " +
                        pos(e->line, e->col));
      }
      auto fit = families_.find(e->name);
      if (fit == families_.end())
        throw dsl_error("dsl: unknown generator family " + e->name + " at " +
                        pos(e->line, e->col));
      std::vector<GrObject> args;
      args.reserve(e->args.size());
      for (const auto& nm : e->args)
        args.push_back(resolve_obj({nm}, e->line, e->col));
      return fit->second(args);
    }
  }
  throw dsl_error("dsl: corrupt expression");
}

GrMorphism Env::eval(const std::string& text) const {
  return eval(parse_expr(text));
}

void Env::load(const DslFile& file) {
  for (const auto& [name, expr] : file.bindings)
    def_morphism(name, eval(expr));
}

Env make_env(unsigned n) {
  Env env(n);
  auto need = [](const std::vector<GrObject>& a, size_t k,
                 const char* name) {
    if (a.size() != k)
      throw dsl_error(std::string("dsl: ") + name + " expects " +
                      std::to_string(k) + " object argument(s)");
  };
  env.def_family("br", [need](const std::vector<GrObject>& a) {
    need(a, 2, "br");
    return braiding(a[0], a[1]);
  });
  env.def_family("brinv", [need](const std::vector<GrObject>& a) {
    need(a, 2, "brinv");
    return braiding_inv(a[0], a[1]);
  });
  env.def_family("ev", [need](const std::vector<GrObject>& a) {
    need(a, 1, "ev");
    return ev(a[0]);
  });
  env.def_family("coev", [need](const std::vector<GrObject>& a) {
    need(a, 1, "coev");
    return coev(a[0]);
  });
  env.def_family("rev", [need](const std::vector<GrObject>& a) {
    need(a, 1, "rev");
    return rev(a[0]);
  });
  env.def_family("rcoev", [need](const std::vector<GrObject>& a) {
    need(a, 1, "rcoev");
    return rcoev(a[0]);
  });
  return env;
}

}  // namespace braidbench
