#include "json.hpp"
#include <fstream>

#include "doctest.h"
#include "lie/models.hpp"

using namespace lie;

TEST_CASE("registry invariants: dimensions and symplectic type of every model") {
  auto& models = builtin_models();
  REQUIRE(models.size() >= 10);
  std::map<std::string, i64> dims;
  int table_rows = 0;
  size_t total_cases = 0;
  for (auto& m : models) {
    CAPTURE(m.name);
    if (m.table_row) ++table_rows;
    total_cases += m.cases.size();
    i64 sum = 0;
    for (auto& [label, hw] : m.rho) {
      (void)label;
      CHECK(m.dual->dominant(hw));
      sum += dim_weyl(*m.dual, hw);
    }
    CHECK(sum == m.total_dim);
    CHECK(m.rho_character().dim() == m.total_dim);
    std::vector<std::pair<IVec, i64>> cons;
    for (auto& [label, hw] : m.rho) {
      (void)label;
      cons.push_back({hw, 1});
    }
    CHECK(symplectic_type(*m.dual, cons));
    dims[m.name] = m.total_dim;
  }
  CHECK(table_rows == 10);
  CHECK(total_cases >= 25);
  CHECK(dims.at("GL4xGL2") == 20);
  CHECK(dims.at("GU4xGU2") == 20);
  CHECK(dims.at("GSp6xGSp4") == 32);
  CHECK(dims.at("GL6") == 20);
  CHECK(dims.at("GU6") == 20);
  CHECK(dims.at("GSp10") == 32);
  CHECK(dims.at("GSp6xGL2") == 16);
  CHECK(dims.at("GSO8xGL2") == 16);
  CHECK(dims.at("GSO12") == 32);
  CHECK(dims.at("E7") == 56);
  CHECK(dims.at("GHSpin12") == 32);
  CHECK(dims.at("GHSpin12xGSpin3") == 24);
  CHECK(dims.at("GSp4xGL2xGL2") == 16);
}

TEST_CASE("every model verifies with zero failures") {
  for (auto& m : builtin_models()) {
    CAPTURE(m.name);
    ReportSection sec = verify_model(m);
    int fails = 0;
    for (auto& it : sec.items)
      if (it.status == Status::Fail) {
        CAPTURE(it.id);
        CAPTURE(it.computed);
        CAPTURE(it.expected);
        ++fails;
        CHECK(it.status != Status::Fail);
      }
    CHECK(fails == 0);
  }
}

TEST_CASE("fixed suites pass") {
  for (auto sec : {verify_weyl_constants(), verify_lemma_2_2(), verify_endoscopy_cancellation()}) {
    CAPTURE(sec.name);
    for (auto& it : sec.items) {
      CAPTURE(it.id);
      CHECK(it.status != Status::Fail);
    }
  }
}

TEST_CASE("eigenspace pieces branch cleanly on every registered case") {
  // the structural soundness behind the case analysis: every eigenvalue class
  // of every registered class decomposes over its centralizer without error
  for (auto& m : builtin_models()) {
    if (m.cases.empty()) continue;
    FormalCharacter rho = m.rho_character();
    std::set<i64> orders;
    for (auto& cs : m.cases) orders.insert(cs.ad_order);
    for (i64 ord : orders)
      for (auto& p : enumerate_torsion(*m.dual, ord)) {
        auto eig = eigenspace_decomposition(rho, p);
        i64 total = 0;
        for (auto& [k, piece] : eig.pieces) {
          (void)k;
          auto dec = decompose(piece);  // must not throw
          i64 dsum = 0;
          for (auto& [hw, mult] : dec) dsum += mult * dim_weyl(*eig.centralizer, hw);
          CHECK(dsum == piece.dim());
          total += piece.dim();
        }
        CHECK(total == m.total_dim);
      }
  }
}

TEST_CASE("verify_all report: determinism and filtering") {
  auto r1 = verify_all();
  auto r2 = verify_all();
  CHECK(r1.to_json() == r2.to_json());
  CHECK(r1.count(Status::Fail) == 0);

  auto only = verify_all({"E7"});
  REQUIRE(only.sections.size() == 1);
  CHECK(only.sections[0].name == "model E7");
  CHECK(only.count(Status::Fail) == 0);

  // markdown and json agree on the summary counts
  auto md = r1.to_markdown();
  CHECK(md.find("fail: 0") != std::string::npos);
}

TEST_CASE("resolve_weight basics") {
  auto e7 = RootDatum::parse("E7sc");
  CHECK(resolve_weight(e7, {0, 0, 0, 0, 0, 0, 1}) == IVec{0, 0, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS(resolve_weight(e7, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("user model configs load and verify") {
  const char* path = "/tmp/lieverify_test_config.json";
  {
    std::ofstream out(path);
    out << R"json({"models": [{
      "name": "user-spin11",
      "dual": "B5sc",
      "dim": 32,
      "rho": [[0,0,0,0,1]],
      "cases": [
        {"name": "id", "centralizer": "B5", "eigen": {"0": 32}, "central": true,
         "neutral": true, "omega": "1"},
        {"name": "z", "exact_order": 2, "centralizer": "B5", "eigen": {"1": 32},
         "central": true, "omega": "eps(rhoX)"},
        {"name": "minus4", "ad_order": 2, "exact_order": 2, "centralizer": "B3+A1+A1",
         "eigen": {"0": 16, "1": 16}, "omega": "eps(Vminus)",
         "pieces": [
           {"factors": [["B3#0", "spin"], ["A1#0", "std"]], "dim": 16},
           {"factors": [["B3#0", "spin"], ["A1#1", "std"]], "dim": 16}],
         "class_pieces": {"0": [0], "1": [1]}}
      ]}]})json";
  }
  auto models = load_models_config(path);
  REQUIRE(models.size() == 1);
  auto sec = verify_model(models[0]);
  for (auto& it : sec.items) {
    CAPTURE(it.id);
    CHECK(it.status != Status::Fail);
  }
  CHECK_THROWS(load_models_config("/nonexistent/nope.json"));
}

TEST_CASE("sign expressions") {
  auto a = SignExpr::symbol("eps(x)");
  CHECK((a * a).is_one());
  CHECK((a * SignExpr::symbol("eta") * a).str() == "eta");
  CHECK(SignExpr::parse("b*a").str() == "a*b");
  CHECK(SignExpr::parse("1").is_one());
  CHECK(SignExpr::one().evaluate() == 1);
  CHECK_THROWS_AS(a.evaluate(), std::domain_error);
  // normalization is order independent
  CHECK((SignExpr::parse("x*y*z") * SignExpr::parse("y")).str() ==
        (SignExpr::parse("z*x")).str());
}

TEST_CASE("omega structure facts on representative classes") {
  // an empty -1 eigenspace forces the trivial shape; a full one forces the
  // total root-number symbol; a proper one forces exactly one symbol
  const ModelSpec* e7 = nullptr;
  for (auto& m : builtin_models())
    if (m.name == "E7") e7 = &m;
  REQUIRE(e7);
  auto rho = e7->rho_character();
  for (auto& p : enumerate_torsion(*e7->dual, 2)) {
    auto eig = eigenspace_decomposition(rho, p);
    auto facts = omega_structure_check(eig, 56);
    std::string label = centralizer_subsystem(*e7->dual, p).type_label();
    if (label == "A7") {
      CHECK(facts.minus_empty);
      CHECK(facts.eps_total.is_one());  // only dual-paired classes
      CHECK(facts.eps_total.evaluate() == 1);
    }
    if (label == "D6+A1") {
      CHECK(!facts.minus_empty);
      CHECK(!facts.minus_everything);
      CHECK(facts.rule_shape == "one-minus-symbol");
      CHECK(facts.eps_total.str() == "eps(cls0)*eps(cls1)");
    }
    if (label == "E7" && p.order == 2) {
      CHECK(facts.minus_everything);
      CHECK(facts.rule_shape == "eps(rhoX)");
    }
  }
}

TEST_CASE("json report parses and carries zero failures") {
  auto rep = verify_all({"GSp10"});
  auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j.at("summary").at("fail").get<int>() == 0);
  CHECK(j.at("engine").at("name").get<std::string>() == "lieverify");
  CHECK(j.at("sections").size() == 1);
}
