#include "mzv/appendix.hpp"
#include "mzv/coaction.hpp"
#include "mzv/depth1.hpp"
#include "mzv/descent.hpp"
#include "mzv/dims.hpp"
#include "mzv/errors.hpp"
#include "mzv/io.hpp"
#include "mzv/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace mzv;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  bool json = false;
  int N = 2;
  std::optional<int> to, ram, ram_to, depth;
  std::string spec_label;
  int r = 1, eps = 0, weight = 1, level = 0, upto = 10, r_max = 7;
  long cutoff = 100000;
  std::string emit = "basis", method = "auto", input, case_name;
  bool words = false, reduced = false, regenerate = false;
};

void print(const Options& o, const json& doc, const std::string& text) {
  if (o.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

json records_json(const std::vector<json>& recs) {
  json arr = json::array();
  for (const auto& r : recs) arr.push_back(r);
  return arr;
}

std::string records_text(const std::vector<json>& recs) {
  std::ostringstream out;
  for (const auto& r : recs) {
    out << r["tag"].get<std::string>() << "  " << r["coeff"].get<std::string>() << "  " << r["left"].get<std::string>()
        << "  (x)  " << r["right"].get<std::string>() << "\n";
  }
  return out.str();
}

json record(std::string tag, std::string left, std::string right, const Rational& c) {
  json r;
  r["tag"] = std::move(tag);
  r["left"] = std::move(left);
  r["right"] = std::move(right);
  r["coeff"] = to_string(c);
  return r;
}

void sort_records(std::vector<json>& recs) {
  std::stable_sort(recs.begin(), recs.end(), [](const json& a, const json& b) {
    return std::tie(a["tag"].get_ref<const std::string&>(), a["left"].get_ref<const std::string&>(),
                    a["right"].get_ref<const std::string&>()) <
           std::tie(b["tag"].get_ref<const std::string&>(), b["left"].get_ref<const std::string&>(),
                    b["right"].get_ref<const std::string&>());
  });
}

bool is_word_text(const std::string& s) { return s.find("I[") != std::string::npos; }

IISymbol word_of(const std::string& text, int& sign) {
  if (is_word_text(text)) {
    sign = 1;
    return parse_word(text);
  }
  auto [sg, w] = mzv_to_word(parse_symbol(text));
  sign = sg;
  return w;
}

int run_coact(const Options& o) {
  int sign = 1;
  const IISymbol w = word_of(o.input, sign);
  std::vector<json> recs;
  for (const auto& [key, c] : coact(w)) {
    std::string left;
    for (const auto& f : key.left) left += (left.empty() ? "" : " * ") + format_word(f);
    recs.push_back(record("raw", left.empty() ? "1" : left, format_word(key.right), c * sign));
  }
  json doc;
  doc["input"] = format_word(w);
  doc["sign"] = sign;
  doc["terms"] = records_json(recs);
  std::ostringstream text;
  text << "coaction of " << (sign < 0 ? "-" : "") << format_word(w) << ": " << recs.size() << " terms\n"
       << records_text(recs);
  print(o, doc, text.str());
  return 0;
}

int run_dr(const Options& o) {
  std::vector<json> recs;
  std::string input;
  if (o.words || is_word_text(o.input)) {
    int sign = 1;
    const IISymbol w = word_of(o.input, sign);
    input = format_word(w);
    for (const auto& t : D_r(w, o.r))
      recs.push_back(record("raw", format_word(t.left), format_word(t.right), t.coeff * sign));
  } else {
    const MZVSymbol z = parse_symbol(o.input);
    input = format_symbol(z);
    const TensorComb tc = D_rp(z, o.r);
    if (o.reduced) {
      for (const auto& [key, c] : tc.reduced())
        recs.push_back(record("reduced", format_depth1(key.first), format_symbol(key.second), c));
    } else {
      for (const auto& t : tc.terms)
        recs.push_back(record(std::string(tag_name(t.tag)), format_depth1(t.left), format_symbol(t.right), t.coeff));
    }
  }
  sort_records(recs);
  json doc;
  doc["input"] = input;
  doc["r"] = o.r;
  doc["terms"] = records_json(recs);
  std::ostringstream text;
  text << "D_" << o.r << " of " << input << ": " << recs.size() << " terms\n" << records_text(recs);
  print(o, doc, text.str());
  return 0;
}

json lincomb_records(const LinComb<Depth1Symbol>& c) {
  json arr = json::array();
  for (const auto& [s, q] : c) arr.push_back({{"symbol", format_depth1(s)}, {"coeff", to_string(q)}});
  return arr;
}

int run_depth1_reduce(const Options& o) {
  const auto red = reduce_depth1(o.N, o.r, o.eps);
  json doc;
  doc["input"] = format_depth1(Depth1Symbol{o.N, o.r, mod(o.eps, o.N)});
  doc["terms"] = lincomb_records(red);
  std::ostringstream text;
  text << doc["input"].get<std::string>() << " =";
  if (red.empty()) text << " 0";
  for (const auto& [s, q] : red) text << " + (" << to_string(q) << ") " << format_depth1(s);
  text << "\n";
  print(o, doc, text.str());
  return 0;
}

int run_depth1_basis(const Options& o) {
  json arr = json::array();
  std::ostringstream text;
  for (const auto& b : depth1_basis(o.N, o.r)) {
    arr.push_back(format_depth1(b));
    text << format_depth1(b) << "\n";
  }
  print(o, json{{"N", o.N}, {"r", o.r}, {"basis", arr}}, text.str());
  return 0;
}

std::vector<DescentSpec> specs_for(const Options& o) {
  if (!o.spec_label.empty()) return {spec_from_label(o.N, o.spec_label)};
  std::vector<DescentSpec> out;
  for (auto& s : supported_specs(o.N))
    if (s.matrices) out.push_back(s);
  return out;
}

int run_basis(const Options& o) {
  const auto specs = specs_for(o);
  std::vector<MZVSymbol> elems =
      o.depth ? enumerate_basis(o.N, o.weight, *o.depth) : enumerate_basis_all_depths(o.N, o.weight);
  json arr = json::array();
  std::ostringstream text;
  text << "basis of weight " << o.weight << " for N=" << o.N << ": " << elems.size() << " elements\n";
  for (const auto& z : elems) {
    json e;
    e["element"] = format_symbol(z);
    e["depth"] = z.depth();
    json lv = json::object();
    text << format_symbol(z);
    for (const auto& s : specs) {
      const int l = level(z, s);
      lv[s.label] = l;
      text << "  [" << s.label << " level " << l << "]";
    }
    e["levels"] = lv;
    arr.push_back(e);
    text << "\n";
  }
  print(o, json{{"N", o.N}, {"weight", o.weight}, {"basis", arr}}, text.str());
  return 0;
}

DescentSpec descend_spec(const Options& o) {
  if (!o.spec_label.empty()) return spec_from_label(o.N, o.spec_label);
  return make_spec(o.N, o.to.value_or(1), o.ram.value_or(default_ramification(o.N)), o.ram_to.value_or(1));
}

json matrix_json(const PartialMatrix& m) {
  json doc;
  doc["spec"] = m.spec_label;
  doc["N"] = m.N;
  doc["n"] = m.n;
  doc["p"] = m.p;
  doc["i"] = m.i;
  json cols = json::array(), rows = json::array(), entries = json::array();
  for (const auto& c : m.columns) cols.push_back(format_symbol(c));
  for (const auto& r : m.rows)
    rows.push_back({{"r", r.r}, {"functional", r.functional}, {"target", format_symbol(r.target)}});
  for (Eigen::Index a = 0; a < m.entries.rows(); ++a) {
    json row = json::array();
    for (Eigen::Index b = 0; b < m.entries.cols(); ++b) row.push_back(to_string(m.entries(a, b)));
    entries.push_back(row);
  }
  doc["columns"] = cols;
  doc["rows"] = rows;
  doc["entries"] = entries;
  return doc;
}

std::vector<int> depths_for(const Options& o) {
  if (o.depth) return {*o.depth};
  std::vector<int> ps;
  for (int p = 1; p <= o.weight; ++p) ps.push_back(p);
  return ps;
}

int run_descend(const Options& o) {
  const DescentSpec spec = descend_spec(o);
  json doc;
  doc["spec"] = spec.label;
  doc["N"] = spec.N;
  doc["weight"] = o.weight;
  doc["level"] = o.level;
  std::ostringstream text;
  text << "descent " << spec.label << " (P=" << spec.P << "), weight " << o.weight << ", level " << o.level << "\n";

  if (o.emit == "split") {
    const auto split = derivation_split(spec);
    doc["descent"] = split.descent;
    doc["rest"] = split.rest;
    text << "descent derivations:";
    for (const auto& s : split.descent) text << " " << s;
    text << "\nother derivations:";
    for (const auto& s : split.rest) text << " " << s;
    text << "\n";
    print(o, doc, text.str());
    return 0;
  }

  DescentEngine engine(spec);
  if (o.emit == "matrix") {
    json mats = json::array();
    for (int p : depths_for(o)) {
      const PartialMatrix& m = engine.partial_matrix(o.weight, p, o.level);
      if (m.columns.empty() && m.rows.empty()) continue;
      mats.push_back(matrix_json(m));
      text << "depth " << p << ": " << m.rows.size() << " x " << m.columns.size() << "\n  columns:";
      for (const auto& c : m.columns) text << " " << format_symbol_short(c);
      text << "\n";
      for (std::size_t a = 0; a < m.rows.size(); ++a) {
        text << "  r=" << m.rows[a].r << " " << spec.functionals(m.rows[a].r)[static_cast<std::size_t>(m.rows[a].functional)].name
             << " -> " << format_symbol_short(m.rows[a].target) << " :";
        for (Eigen::Index b = 0; b < m.entries.cols(); ++b)
          text << " " << to_string(m.entries(static_cast<Eigen::Index>(a), b));
        text << "\n";
      }
    }
    doc["matrices"] = mats;
    print(o, doc, text.str());
    return 0;
  }

  if (o.emit == "certificate") {
    bool all = true;
    json certs = json::array();
    for (int p : depths_for(o)) {
      const Certificate c = engine.certificate(o.weight, p, o.level);
      all = all && c.pass;
      certs.push_back({{"p", p}, {"pass", c.pass}, {"orientation", c.orientation}, {"P", c.P}, {"detail", c.detail}});
      text << "depth " << p << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.orientation << ") " << c.detail << "\n";
    }
    doc["certificates"] = certs;
    doc["pass"] = all;
    print(o, doc, text.str());
    return all ? 0 : 3;
  }

  if (o.emit != "basis" && o.emit != "cl") throw DomainError("unknown --emit value '" + o.emit + "'");
  json elems = json::array();
  bool all = true;
  for (const auto& corr : engine.corrected_basis(o.weight, o.level)) {
    const int p = corr.element.depth();
    if (o.depth && p != *o.depth) continue;
    const Certificate cert = engine.certificate(o.weight, p, o.level + 1);
    all = all && cert.pass;
    json e;
    e["element"] = format_symbol(corr.element);
    e["level"] = level(corr.element, spec);
    json cl = json::array();
    for (const auto& [z, c] : corr.correction) cl.push_back({{"element", format_symbol(z)}, {"coeff", to_string(c)}});
    e["correction"] = cl;
    json fp = json::array();
    for (const auto& z : corr.free_parameters) fp.push_back(format_symbol(z));
    e["free_parameters"] = fp;
    e["certificates"] = {{"modP", cert.pass}};
    elems.push_back(e);

    text << format_symbol_short(corr.element);
    if (o.emit == "cl") {
      for (const auto& [z, c] : corr.correction) text << " + (" << to_string(c) << ") " << format_symbol_short(z);
      if (!corr.free_parameters.empty()) text << "  [+ " << corr.free_parameters.size() << " free lower-depth terms]";
      text << "  modP " << (cert.pass ? "pass" : "FAIL");
    } else {
      text << "  level " << e["level"].get<int>();
    }
    text << "\n";
  }
  doc["elements"] = elems;
  print(o, doc, text.str());
  return all ? 0 : 3;
}

int run_dims(const Options& o) {
  const int M = o.ram.value_or(default_gen_ramification(o.N));
  const GenProfile g = gen_counts(o.N, M);
  const auto d = dims(o.N, M, o.upto);
  json seq = json::array();
  std::ostringstream text;
  for (std::size_t n = 0; n < d.size(); ++n) {
    seq.push_back(d[n].str());
    text << (n ? " " : "") << d[n].str();
  }
  text << "\n" << hilbert_series(g) << "\n";
  print(o, json{{"N", o.N}, {"M", M}, {"dims", seq}, {"hilbert_series", hilbert_series(g)}}, text.str());
  return 0;
}

EvalMethod parse_method(const std::string& m) {
  if (m == "auto") return EvalMethod::Auto;
  if (m == "nested") return EvalMethod::NestedSum;
  if (m == "split") return EvalMethod::Split;
  throw DomainError("unknown method '" + m + "'");
}

int run_oracle_eval(const Options& o) {
  const MZVSymbol z = parse_symbol(o.input);
  const NumericValue v = eval_mzv(z, o.cutoff, parse_method(o.method));
  json doc{{"symbol", format_symbol(z)},
           {"real", format_real(v.real)},
           {"imag", format_real(v.imag)},
           {"error_bound", format_real(v.error_bound, 6)}};
  std::ostringstream text;
  text << format_symbol(z) << "\n  real  " << format_real(v.real) << "\n  imag  " << format_real(v.imag)
       << "\n  error bound  " << format_real(v.error_bound, 6) << "\n";
  print(o, doc, text.str());
  return 0;
}

int run_oracle_table(const Options& o) {
  json rows = json::array();
  std::ostringstream text;
  Real worst = 0;
  for (const auto& row : check_depth1_table(o.N, o.r_max, o.cutoff)) {
    worst = std::max(worst, row.residual);
    rows.push_back({{"r", row.r},
                    {"e", row.e},
                    {"reduction", lincomb_records(row.reduction)},
                    {"residual", format_real(row.residual, 6)},
                    {"bound", format_real(row.bound, 6)}});
    text << format_depth1(Depth1Symbol{o.N, row.r, row.e}) << "  residual " << format_real(row.residual, 6)
         << "  bound " << format_real(row.bound, 6) << "\n";
  }
  text << "worst residual " << format_real(worst, 6) << "\n";
  print(o, json{{"N", o.N}, {"rows", rows}, {"worst", format_real(worst, 6)}}, text.str());
  return 0;
}

// Appendix cases. Golden files keep the printed values under "printed"
// (entered by hand, never rewritten) and the last machine output under
// "machine" (rewritten only by --regenerate-golden).

json element_json(const LinComb<MZVSymbol>& c) {
  json arr = json::array();
  for (const auto& [z, q] : c) arr.push_back({{"symbol", format_symbol(z)}, {"coeff", to_string(q)}});
  return arr;
}

LinComb<MZVSymbol> element_from(const json& arr) {
  LinComb<MZVSymbol> out;
  for (const auto& t : arr) out.add(parse_symbol(t.at("symbol").get<std::string>()), parse_rational(t.at("coeff").get<std::string>()));
  return out;
}

json rational_rows(const std::vector<std::vector<Rational>>& m) {
  json arr = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    arr.push_back(r);
  }
  return arr;
}

json rational_list(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(to_string(q));
  return arr;
}

LinComb<MZVSymbol> corrected(DescentEngine& engine, const MZVSymbol& b, const Rational& scale = Rational(1)) {
  const Correction c = engine.solve_correction(b, 0);
  LinComb<MZVSymbol> out = c.correction;
  out.add(c.element, Rational(1));
  return out.scaled(scale);
}

json machine_case(const std::string& name) {
  json out;
  json elems = json::array();
  if (name == "A3-111" || name == "A3-112") {
    DescentEngine engine(spec_from_label(2, "Q/Q,2/1"));
    const int c = name == "A3-111" ? 1 : 2;
    const DepthThreeSystem s = depth_three_machine(engine, 1, 1, c);
    out["M"] = rational_rows(s.M);
    out["A"] = rational_list(s.A);
    elems.push_back(element_json(s.element));
  } else if (name == "A1-depth2") {
    DescentEngine engine(spec_from_label(2, "Q/Q,2/1"));
    for (auto [x1, x2] : {std::pair{3, 3}, {3, 5}, {5, 3}, {5, 7}})
      elems.push_back(element_json(corrected(engine, make_mzv(2, {x1, x2}, {0, 1}))));
  } else if (name == "A3-depth4") {
    DescentEngine engine(spec_from_label(2, "Q/Q,2/1"));
    elems.push_back(element_json(corrected(engine, make_mzv(2, {3, 3, 3, 3}, {0, 0, 0, 1}), Rational(-1))));
  } else if (name == "A5-N3" || name == "A5-N4") {
    const int N = name == "A5-N3" ? 3 : 4;
    DescentEngine engine(spec_from_label(N, N == 3 ? "k3/Q,3/1" : "k4/Q,2/1"));
    for (auto [x1, x2] : {std::pair{5, 3}, {3, 5}, {5, 5}, {7, 5}, {9, 5}})
      elems.push_back(element_json(corrected(engine, make_mzv(N, {x1, x2}, {0, 1}))));
  } else {
    throw DomainError("unknown case '" + name + "'");
  }
  out["elements"] = elems;
  return out;
}

// Field-by-field differences between a reference section and the machine output.
std::vector<std::string> compare_case(const json& ref, const json& got) {
  std::vector<std::string> diffs;
  for (const char* key : {"M", "A"}) {
    if (!ref.contains(key)) continue;
    const json& a = ref[key];
    const json& b = got.at(key);
    if (a.size() != b.size()) {
      diffs.push_back(std::string(key) + ": size differs");
      continue;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_array()) {
        for (std::size_t j = 0; j < a[i].size(); ++j)
          if (parse_rational(a[i][j].get<std::string>()) != parse_rational(b[i][j].get<std::string>()))
            diffs.push_back(std::string(key) + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                            "]: expected " + a[i][j].get<std::string>() + ", computed " + b[i][j].get<std::string>());
      } else if (parse_rational(a[i].get<std::string>()) != parse_rational(b[i].get<std::string>())) {
        diffs.push_back(std::string(key) + "[" + std::to_string(i + 1) + "]: expected " + a[i].get<std::string>() +
                        ", computed " + b[i].get<std::string>());
      }
    }
  }
  const json& ea = ref.at("elements");
  const json& eb = got.at("elements");
  if (ea.size() != eb.size()) {
    diffs.push_back("elements: count differs");
    return diffs;
  }
  for (std::size_t i = 0; i < ea.size(); ++i) {
    const auto want = element_from(ea[i]);
    const auto have = element_from(eb[i]);
    if (want == have) continue;
    LinComb<MZVSymbol> delta = have;
    delta -= want;
    for (const auto& [z, q] : delta)
      diffs.push_back("element " + std::to_string(i + 1) + ", " + format_symbol(z) + ": expected " +
                      to_string(want.coeff(z)) + ", computed " + to_string(have.coeff(z)));
  }
  return diffs;
}

int run_verify_appendix(const Options& o) {
  const std::filesystem::path path = std::filesystem::path(MZV_GOLDEN_DIR) / (o.case_name + ".json");
  std::ifstream in(path);
  if (!in) throw DomainError("no golden file " + path.string());
  json golden = json::parse(in);
  const json got = machine_case(o.case_name);

  if (o.regenerate) {
    golden["machine"] = got;
    std::ofstream(path) << golden.dump(2) << "\n";
  }
  const auto printed = compare_case(golden.at("printed"), got);
  std::vector<std::string> snapshot;
  if (golden.contains("machine")) snapshot = compare_case(golden["machine"], got);

  json doc;
  doc["case"] = o.case_name;
  doc["computed"] = got;
  doc["printed_differences"] = printed;
  doc["snapshot_differences"] = snapshot;
  doc["pass"] = printed.empty() && snapshot.empty();

  std::ostringstream text;
  text << "case " << o.case_name << "\n";
  if (got.contains("M")) {
    text << "M3 =\n";
    for (const auto& row : got["M"]) {
      text << " ";
      for (const auto& q : row) text << " " << q.get<std::string>();
      text << "\n";
    }
    text << "A =";
    for (const auto& q : got["A"]) text << " " << q.get<std::string>();
    text << "\n";
  }
  for (const auto& el : got["elements"]) {
    text << "element:";
    for (const auto& t : el) text << " + (" << t["coeff"].get<std::string>() << ") " << format_symbol_short(parse_symbol(t["symbol"].get<std::string>()));
    text << "\n";
  }
  text << "against printed values: " << (printed.empty() ? "match" : std::to_string(printed.size()) + " differences") << "\n";
  for (const auto& d : printed) text << "  " << d << "\n";
  if (!snapshot.empty()) {
    text << "against machine snapshot: " << snapshot.size() << " differences\n";
    for (const auto& d : snapshot) text << "  " << d << "\n";
  }
  print(o, doc, text.str());
  return printed.empty() && snapshot.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motivic multiple zeta values relative to roots of unity"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "JSON output");

  auto* coact_cmd = app.add_subcommand("coact", "Goncharov coaction of a word or symbol");
  coact_cmd->add_option("input", o.input, "I[N](a0; a1,...; b) or zeta[N](k; x | e)")->required();

  auto* dr_cmd = app.add_subcommand("dr", "weight-r derivation D_r");
  dr_cmd->add_option("--r", o.r)->required();
  dr_cmd->add_option("input", o.input)->required();
  dr_cmd->add_flag("--words", o.words, "word-level cuts instead of the depth-graded formula");
  dr_cmd->add_flag("--reduced", o.reduced, "reduce left factors to the depth-one basis");

  auto* d1_cmd = app.add_subcommand("depth1", "depth-one tables");
  d1_cmd->require_subcommand(1);
  auto* d1_reduce = d1_cmd->add_subcommand("reduce", "reduce zl(r; xi^eps) to the basis");
  d1_reduce->add_option("--N", o.N)->required();
  d1_reduce->add_option("--r", o.r)->required();
  d1_reduce->add_option("--eps", o.eps)->required();
  auto* d1_basis = d1_cmd->add_subcommand("basis", "depth-one basis in weight r");
  d1_basis->add_option("--N", o.N)->required();
  d1_basis->add_option("--r", o.r)->required();

  auto* basis_cmd = app.add_subcommand("basis", "basis elements with their levels");
  basis_cmd->add_option("--N", o.N)->required();
  basis_cmd->add_option("--weight", o.weight)->required();
  basis_cmd->add_option("--depth", o.depth);
  basis_cmd->add_option("--spec", o.spec_label, "descent label, e.g. k4/Q,2/1");

  auto* desc_cmd = app.add_subcommand("descend", "Galois descent: bases, matrices, corrections, certificates");
  desc_cmd->add_option("--N", o.N)->required();
  desc_cmd->add_option("--to", o.to);
  desc_cmd->add_option("--ram", o.ram);
  desc_cmd->add_option("--ram-to", o.ram_to);
  desc_cmd->add_option("--spec", o.spec_label);
  desc_cmd->add_option("--weight", o.weight)->required();
  desc_cmd->add_option("--level", o.level);
  desc_cmd->add_option("--depth", o.depth);
  desc_cmd->add_option("--emit", o.emit)->check(CLI::IsMember({"basis", "matrix", "cl", "certificate", "split"}));

  auto* dims_cmd = app.add_subcommand("dims", "dimensions and Hilbert series");
  dims_cmd->add_option("--N", o.N)->required();
  dims_cmd->add_option("--upto", o.upto);
  dims_cmd->add_option("--ram", o.ram);

  auto* oracle_cmd = app.add_subcommand("oracle", "numeric evaluation");
  oracle_cmd->require_subcommand(1);
  auto* eval_cmd = oracle_cmd->add_subcommand("eval", "evaluate a symbol");
  eval_cmd->add_option("input", o.input)->required();
  eval_cmd->add_option("--cutoff", o.cutoff);
  eval_cmd->add_option("--method", o.method)->check(CLI::IsMember({"auto", "nested", "split"}));
  auto* table_cmd = oracle_cmd->add_subcommand("table", "check the depth-one table numerically");
  table_cmd->add_option("--N", o.N)->required();
  table_cmd->add_option("--rmax", o.r_max);
  table_cmd->add_option("--cutoff", o.cutoff);

  auto* app_cmd = app.add_subcommand("verify-appendix", "compare an appendix case with its golden file");
  app_cmd->add_option("--case", o.case_name, "A3-111, A3-112, A3-depth4, A1-depth2, A5-N3, A5-N4")->required();
  app_cmd->add_flag("--regenerate-golden", o.regenerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*coact_cmd) return run_coact(o);
    if (*dr_cmd) return run_dr(o);
    if (*d1_reduce) return run_depth1_reduce(o);
    if (*d1_basis) return run_depth1_basis(o);
    if (*basis_cmd) return run_basis(o);
    if (*desc_cmd) return run_descend(o);
    if (*dims_cmd) return run_dims(o);
    if (*eval_cmd) return run_oracle_eval(o);
    if (*table_cmd) return run_oracle_table(o);
    if (*app_cmd) return run_verify_appendix(o);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CertificateError& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
