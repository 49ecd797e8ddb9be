// Formal products of order-two sign symbols (local root-number symbols,
// quadratic-character values).  Nothing here is ever numeric: an expression
// normalizes to a sorted product where every repeated symbol cancels, and
// only the empty product evaluates.
#pragma once

#include <set>
#include <stdexcept>
#include <string>

namespace lie {

class SignExpr {
 public:
  SignExpr() = default;

  static SignExpr one() { return SignExpr(); }
  static SignExpr symbol(const std::string& name) {
    SignExpr e;
    e.syms_.insert(name);
    return e;
  }
  static SignExpr parse(const std::string& s) {
    SignExpr e;
    if (s == "1" || s.empty()) return e;
    size_t start = 0;
    while (start <= s.size()) {
      size_t star = s.find('*', start);
      std::string tok = s.substr(start, star == std::string::npos ? star : star - start);
      if (!tok.empty() && tok != "1") e = e * symbol(tok);
      if (star == std::string::npos) break;
      start = star + 1;
    }
    return e;
  }

  friend SignExpr operator*(const SignExpr& a, const SignExpr& b) {
    SignExpr e = a;
    for (auto& s : b.syms_) {
      auto it = e.syms_.find(s);
      if (it != e.syms_.end())
        e.syms_.erase(it);  // x * x = 1
      else
        e.syms_.insert(s);
    }
    return e;
  }

  bool is_one() const { return syms_.empty(); }
  bool operator==(const SignExpr& o) const { return syms_ == o.syms_; }

  std::string str() const {
    if (syms_.empty()) return "1";
    std::string out;
    for (auto& s : syms_) {
      if (!out.empty()) out += "*";
      out += s;
    }
    return out;
  }

  int evaluate() const {
    if (!is_one())
      throw std::domain_error("cannot evaluate a bare formal sign symbol: " + str());
    return 1;
  }

 private:
  std::set<std::string> syms_;
};

}  // namespace lie
