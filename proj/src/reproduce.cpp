#include "mdslab/reproduce.hpp"

#include <set>
#include <sstream>

#include "mdslab/covering.hpp"
#include "mdslab/criteria.hpp"
#include "mdslab/equiv.hpp"
#include "mdslab/extend.hpp"

namespace mdslab {

bool RunReport::all_pass() const {
  for (const auto& o : outcomes)
    if (!o.pass) return false;
  return true;
}

const std::vector<std::string>& reproduce_ids() {
  static const std::vector<std::string> ids{"counterexample", "example4", "example5", "remark2", "q8-square"};
  return ids;
}

namespace {

std::string join(const std::set<Elem>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Elem x : s) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string join(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string params(const LinearCode& c, const CodeClass& cls) {
  std::ostringstream os;
  os << '[' << c.n() << ',' << c.k() << ',' << cls.d << "]_" << c.field().q() << ' ' << to_string(cls.tag);
  return os.str();
}

class Recorder {
 public:
  explicit Recorder(RunReport& r) : r_(r) {}
  void row(std::string claim, std::string expected, std::string computed) {
    bool pass = expected == computed;
    r_.outcomes.push_back({std::move(claim), std::move(expected), std::move(computed), pass});
  }
  void flag(std::string claim, bool value) { row(std::move(claim), "true", value ? "true" : "false"); }

 private:
  RunReport& r_;
};

std::set<Elem> rl_deltas(const LinearCode& c, const Vec& S) {
  std::set<Elem> out;
  for (Elem d = 0; d < c.field().q(); ++d)
    if (monomial_equivalent(c, roth_lempel(c.field(), S, 4, d)).found) out.insert(d);
  return out;
}

LinearCode extend_example(const LinearCode& base, const Vec& last) {
  return extend_by_deep_hole(base, last).extended;
}

void counterexample(RunReport& r) {
  Recorder rec(r);
  auto f = Field::make(2);
  auto c = LinearCode::from_generator(Matrix::from_rows(f, {{1, 0, 0, 0, 0, 1, 1, 1},
                                                            {0, 1, 0, 0, 1, 0, 1, 1},
                                                            {0, 0, 1, 0, 1, 1, 0, 1},
                                                            {0, 0, 0, 1, 1, 1, 1, 0}}));
  Vec u{0, 1, 1, 1, 0, 1, 0, 0};
  r.inputs = {{"code", "extended Hamming [8,4,4]_2"}, {"u", join(u)}};
  rec.row("C1.base", "[8,4,4]_2 NMDS", params(c, classify(c)));
  auto t = SyndromeTable::build(c);
  rec.row("C1.rho", "2", std::to_string(t.covering_radius()));
  rec.flag("C1.deep-hole", t.error_distance(u) == t.covering_radius());
  auto cu = LinearCode::from_generator(c.generator().append_row(u));
  auto cu_cls = classify(cu);
  rec.row("C1.cu", "[8,5,2]_2 OTHER", params(cu, cu_cls));
  auto ext = extend_by_deep_hole(c, u);
  rec.row("C1.extended", "[9,5,3]_2 OTHER", params(ext.extended, ext.extended_class));
  rec.flag("C1.neither-nmds", cu_cls.tag != CodeTag::NMDS && ext.extended_class.tag != CodeTag::NMDS);
}

void example4(RunReport& r) {
  Recorder rec(r);
  auto f = Field::make(11);
  auto cfg = EvalConfig::ones(f, {3, 4, 5, 6, 7});
  r.inputs = {{"q", "11"}, {"S", "{3,4,5,6,7}"}, {"k", "3"}, {"g", "4x^3+3x^2+10x+7"}};
  auto c = esgrs(cfg, 3);
  rec.flag("C2.generator",
           c == LinearCode::from_generator(Matrix::from_rows(f, {{1, 1, 1, 1, 1, 0}, {3, 4, 5, 6, 7, 0}, {5, 9, 4, 7, 2, 1}})));
  rec.row("C2.params", "[6,3,4]_11 MDS", params(c, classify(c)));
  rec.row("C2.non-grs", "none", equivalent_to_some_grs(c) ? "witness" : "none");
  auto t = SyndromeTable::build(c);
  rec.row("C2.rho", "3", std::to_string(t.covering_radius()));

  Poly fx(f, {7, 10, 0, 4});
  auto g = candidate_polynomial(f, 3, 0, 3, fx);
  rec.row("C2.g", Poly(f, {7, 10, 3, 4}).to_string(), g.to_string());
  std::set<Elem> class1, definition;
  for (Elem u = 0; u < 11; ++u) {
    if (class1_is_deep_hole(cfg, 3, 3, fx, u)) class1.insert(u);
    if (t.error_distance(deep_hole_candidate(cfg, g, u)) == 3) definition.insert(u);
  }
  rec.row("C2.class1-holes", "{1,3,4,8}", join(class1));
  rec.row("C2.definition-holes", "{1,3,4,8}", join(definition));
  rec.row("C2.hole-vector", "(7,10,5,5,1,4)", join(deep_hole_candidate(cfg, g, 4)));
  std::set<Elem> deltas;
  for (Elem d = 0; d < 11; ++d)
    if (is_nk_delta_set(f, cfg.S, 3, d)) deltas.insert(d);
  rec.row("C2.delta-set", "{0,8,9,10}", join(deltas));

  auto c0 = extend_example(c, {7, 10, 5, 5, 1, 4});
  rec.row("C2.branch1-params", "[7,4,4]_11 MDS", params(c0, classify(c0)));
  rec.flag("C2.branch1-rl0", monomial_equivalent(c0, roth_lempel(f, cfg.S, 4, 0)).found);
  const std::pair<const char*, Elem> named[] = {{"c1", 1}, {"c2", 3}, {"c3", 8}};
  const char* expect[] = {"{}", "{}", "{9,10}"};
  for (std::size_t i = 0; i < 3; ++i) {
    auto ci = extend_example(c, {7, 10, 5, 5, 1, named[i].second});
    std::string id = std::string("C2.") + named[i].first;
    rec.row(id + "-params", "[7,4,4]_11 MDS", params(ci, classify(ci)));
    rec.row(id + "-rl", expect[i], join(rl_deltas(ci, cfg.S)));
  }
}

void example5(RunReport& r) {
  Recorder rec(r);
  auto f = Field::make(11);
  auto cfg = EvalConfig::ones(f, {3, 4, 5, 6, 7});
  r.inputs = {{"q", "11"}, {"S", "{3,4,5,6,7}"}, {"k", "3"}, {"g_4", "2"}, {"f", "3x^3+5x+2"}};
  Poly fx(f, {2, 5, 0, 3});
  auto all_but_8 = std::set<Elem>{0, 1, 2, 3, 4, 5, 6, 7, 9, 10};
  auto all = all_but_8;
  all.insert(8);
  auto l0 = forbidden_set(cfg, 3, 2, f.sub(0, fx.coeff(3)));
  auto l4 = forbidden_set(cfg, 3, 2, f.sub(4, fx.coeff(3)));
  rec.row("C3.L-u0", join(all_but_8), join(l0.L));
  rec.row("C3.L-u4", join(all), join(l4.L));
  auto c = esgrs(cfg, 3);
  auto t = SyndromeTable::build(c);
  auto g = candidate_polynomial(f, 3, 2, 8, fx);
  Vec u = deep_hole_candidate(cfg, g, 0);
  rec.row("C3.hole-vector", "(2,7,4,7,1,0)", join(u));
  rec.flag("C3.deep-hole", t.error_distance(u) == t.covering_radius());
  bool none_at_4 = true;
  for (Elem g2 = 0; g2 < 11; ++g2) {
    for (Elem f0 = 0; f0 < 11; ++f0)
      for (Elem f1 = 0; f1 < 11; ++f1) {
        Poly h(f, {f0, f1, g2, 3, 2});
        if (t.error_distance(deep_hole_candidate(cfg, h, 4)) == t.covering_radius()) none_at_4 = false;
      }
  }
  rec.flag("C3.no-holes-u4", none_at_4);
  auto ext = extend_by_deep_hole(t, u);
  rec.row("C3.params", "[7,4,4]_11 MDS", params(ext.extended, ext.extended_class));
  rec.row("C3.rl", "{}", join(rl_deltas(ext.extended, cfg.S)));
}

void remark2(RunReport& r) {
  Recorder rec(r);
  auto f = Field::make(11);
  Vec S{1, 2, 5, 6, 9};
  r.inputs = {{"q", "11"}, {"S", "{1,2,5,6,9}"}, {"coefficient", "3"}};
  Matrix g(f, 4, 7);
  for (std::size_t j = 0; j < 5; ++j)
    for (std::size_t i = 0; i < 4; ++i) g.set(i, j, f.pow(S[j], i));
  g.set(2, 5, 1);
  g.set(2, 6, 1);
  g.set(3, 6, 3);
  auto c = LinearCode::from_generator(g);
  rec.row("C4.params", "[7,4,4]_11 MDS", params(c, classify(c)));
  rec.row("C4.non-grs", "none", equivalent_to_some_grs(c) ? "witness" : "none");
  rec.row("C4.rl", "{3,7}", join(rl_deltas(c, S)));
}

void q8_square(RunReport& r) {
  Recorder rec(r);
  auto f = Field::make(2, 3);
  Vec all(8);
  for (Elem a = 0; a < 8; ++a) all[a] = a;
  auto cfg = EvalConfig::ones(f, all);
  r.inputs = {{"q", "8"}, {"k", "6"}};
  rec.row("C11.esgrs", "1", std::to_string(square_code_distinguisher(esgrs(cfg, 6))));
  rec.flag("C11.egrs-at-least-2", square_code_distinguisher(egrs(cfg, 6)) >= 2);
}

}  // namespace

RunReport reproduce(std::string_view id) {
  RunReport r;
  r.command = "reproduce " + std::string(id);
  auto start = std::chrono::steady_clock::now();
  if (id == "counterexample") counterexample(r);
  else if (id == "example4") example4(r);
  else if (id == "example5") example5(r);
  else if (id == "remark2") remark2(r);
  else if (id == "q8-square") q8_square(r);
  else throw BadInput("unknown example id: " + std::string(id));
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace mdslab
