#include "lie/endoscopy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lie {

namespace {

i64 degree_sum(const std::vector<ClassFactor>& fs) {
  i64 s = 0;
  for (auto& f : fs) s += f.degree;
  return s;
}

int form_parity(const std::vector<ClassFactor>& fs) {
  int p = 0;
  for (auto& f : fs)
    if (f.is_field()) p ^= (f.cbit & 1);
  return p;
}

void flip(std::vector<ClassFactor>& fs) {
  for (auto& f : fs)
    if (f.flip_active()) f.cbit ^= 1;
}

RationalClass canonical(RationalClass c) {
  auto first_active_bit = [&]() -> int* {
    for (auto& f : c.h1)
      if (f.flip_active()) return &f.cbit;
    for (auto& f : c.h2)
      if (f.flip_active()) return &f.cbit;
    return nullptr;
  };
  int* lead = first_active_bit();
  if (lead && *lead == 1) {
    flip(c.h1);
    flip(c.h2);
  }
  return c;
}

std::string factor_str(const ClassFactor& f) {
  std::string k =
      f.kind == FactorKind::SplitPair ? "S" : (f.kind == FactorKind::FieldE ? "E" : "Q");
  return k + "(" + f.label + (f.is_field() ? ("," + std::to_string(f.cbit)) : "") + ")";
}

}  // namespace

std::vector<ClassFactor> StableClass::gu4() const {
  std::vector<ClassFactor> all = h1;
  all.insert(all.end(), h2.begin(), h2.end());
  return all;
}

i64 StableClass::total_degree() const { return degree_sum(h1) + degree_sum(h2); }

std::vector<ClassFactor> RationalClass::gu4() const {
  std::vector<ClassFactor> all = h1;
  all.insert(all.end(), h2.begin(), h2.end());
  return all;
}

std::string RationalClass::str() const {
  std::string s = "[";
  for (size_t i = 0; i < h1.size(); ++i) s += (i ? "," : "") + factor_str(h1[i]);
  s += " | ";
  for (size_t i = 0; i < h2.size(); ++i) s += (i ? "," : "") + factor_str(h2[i]);
  return s + "]";
}

std::vector<RationalClass> rational_classes(const StableClass& stable, Side side,
                                            int eta_minus_one) {
  if (eta_minus_one != 1 && eta_minus_one != -1)
    throw std::invalid_argument("eta branch must be +1 or -1");
  if (degree_sum(stable.h1) != 2 || degree_sum(stable.h2) != 2)
    throw std::invalid_argument("unsupported shape: factor degrees must each sum to 2");

  // which bit parity the quasi-split form carries on each factor
  int qs_parity = (eta_minus_one == 1) ? 0 : 1;
  int want = (side == Side::QuasiSplit) ? qs_parity : qs_parity ^ 1;

  std::vector<int> field_pos1, field_pos2;
  for (size_t i = 0; i < stable.h1.size(); ++i)
    if (stable.h1[i].is_field()) field_pos1.push_back(static_cast<int>(i));
  for (size_t i = 0; i < stable.h2.size(); ++i)
    if (stable.h2[i].is_field()) field_pos2.push_back(static_cast<int>(i));

  std::set<std::string> seen;
  std::vector<RationalClass> out;
  size_t nbits = field_pos1.size() + field_pos2.size();
  for (size_t mask = 0; mask < (size_t(1) << nbits); ++mask) {
    RationalClass c;
    c.h1 = stable.h1;
    c.h2 = stable.h2;
    size_t b = 0;
    for (int i : field_pos1) c.h1[i].cbit = (mask >> b++) & 1;
    for (int i : field_pos2) c.h2[i].cbit = (mask >> b++) & 1;
    if (form_parity(c.h1) != form_parity(c.h2)) continue;  // mixed inner forms
    if (form_parity(c.h1) != want) continue;
    c = canonical(c);
    if (seen.insert(c.str()).second) out.push_back(c);
  }
  return out;
}

std::vector<EndoMatch> stable_matches(const std::vector<ClassFactor>& gu4_factors) {
  i64 total = degree_sum(gu4_factors);
  size_t n = gu4_factors.size();
  std::vector<EndoMatch> out;
  std::set<std::string> seen;
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    std::vector<int> minus;
    i64 deg = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) {
        minus.push_back(static_cast<int>(i));
        deg += gu4_factors[i].degree;
      }
    if (2 * deg != total) continue;
    // dedupe collapsed matches by the unordered content of the two sides
    std::multiset<std::string> plus_labels, minus_labels;
    for (size_t i = 0; i < n; ++i) {
      ClassFactor f = gu4_factors[i];
      f.cbit = 0;
      bool neg = mask & (size_t(1) << i);
      (neg ? minus_labels : plus_labels).insert(factor_str(f));
    }
    std::string key = "+";
    for (auto& s : plus_labels) key += s;
    key += "-";
    for (auto& s : minus_labels) key += s;
    if (!seen.insert(key).second) continue;
    EndoMatch m;
    m.minus = minus;
    std::string pp, mp;
    for (auto& s : plus_labels) pp += s;
    for (auto& s : minus_labels) mp += s;
    m.gprime_label = "(" + pp + ")(" + mp + ")";
    out.push_back(m);
  }
  if (out.empty()) {
    EndoMatch none, all;
    none.gprime_label = "(full)()";
    for (size_t i = 0; i < n; ++i) all.minus.push_back(static_cast<int>(i));
    all.gprime_label = "()(full)";
    out.push_back(none);
    out.push_back(all);
  }
  return out;
}

std::vector<EndoMatch> stable_matches(const StableClass& stable) {
  return stable_matches(stable.gu4());
}

int transfer_sign(const RationalClass& c, const EndoMatch& m) {
  int sign = 1;
  auto big = c.gu4();
  for (int i : m.minus) {
    const ClassFactor& f = big.at(i);
    if (f.is_field() && (f.cbit & 1)) sign = -sign;
  }
  for (auto& f : c.h1)  // the small factor sits entirely in I^-
    if (f.is_field() && (f.cbit & 1)) sign = -sign;
  return sign;
}

i64 verify_cancellation(const StableClass& stable, int eta_minus_one) {
  auto qs = rational_classes(stable, Side::QuasiSplit, eta_minus_one);
  auto in = rational_classes(stable, Side::InnerForms, eta_minus_one);
  i64 worst = 0;
  for (auto& m : stable_matches(stable)) {
    i64 sum = 0;
    for (auto& c : qs) sum += transfer_sign(c, m);
    for (auto& c : in) sum -= transfer_sign(c, m);
    worst = std::max(worst, sum < 0 ? -sum : sum);
  }
  return worst;
}

StableClass parse_stable_shape(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("unsupported shape: " + s);
  auto parse_list = [](const std::string& part) {
    std::vector<ClassFactor> out;
    size_t i = 0;
    while (i < part.size()) {
      ClassFactor f;
      switch (part[i]) {
        case 'E':
          f.kind = FactorKind::FieldE;
          f.degree = 1;
          break;
        case 'Q':
          f.kind = FactorKind::FieldOther;
          f.degree = 2;
          break;
        case 'S':
          f.kind = FactorKind::SplitPair;
          f.degree = 1;
          break;
        default:
          throw std::invalid_argument("unsupported shape factor");
      }
      if (i + 1 >= part.size() || part[i + 1] != '(')
        throw std::invalid_argument("unsupported shape: missing label");
      size_t close = part.find(')', i);
      if (close == std::string::npos) throw std::invalid_argument("unsupported shape");
      f.label = part.substr(i + 2, close - i - 2);
      out.push_back(f);
      i = close + 1;
      if (i < part.size() && part[i] == ',') ++i;
    }
    return out;
  };
  StableClass st;
  st.h1 = parse_list(s.substr(0, bar));
  st.h2 = parse_list(s.substr(bar + 1));
  if (degree_sum(st.h1) != 2 || degree_sum(st.h2) != 2)
    throw std::invalid_argument("unsupported shape: factor degrees must each sum to 2");
  return st;
}

GsoDoubling gso_class_doubling(const std::string& datum_label) {
  GsoDoubling out;
  out.g_classes = {datum_label + ":outer+", datum_label + ":outer-"};
  out.gp_classes = {
      {datum_label + ":(+,+)", out.g_classes[0]},
      {datum_label + ":(-,-)", out.g_classes[0]},
      {datum_label + ":(+,-)", out.g_classes[1]},
      {datum_label + ":(-,+)", out.g_classes[1]},
  };
  return out;
}

}  // namespace lie
