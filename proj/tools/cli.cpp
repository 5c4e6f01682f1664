#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "a3kit/error.hpp"
#include "a3kit/io.hpp"
#include "a3kit/search.hpp"
#include "a3kit/yangbaxter.hpp"

namespace a3kit::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxListed = 20;

struct Check {
  std::string name;
  CheckReport report;
  std::vector<std::string> labels;  // basis for index tuples and residual axes
};

struct Outcome {
  Outcome() = default;
  explicit Outcome(std::string c) : command(std::move(c)) {}
  std::string command;
  std::vector<Check> checks;
  json info = json::object();
  std::optional<json> document;
  std::optional<json> payload;  // command-specific extra block (search results)
  std::vector<std::string> lines;  // table-mode rendering of payload
  bool informational = false;   // exit 0 regardless of verdicts

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.report.passed; });
  }
};

std::string tensor_terms(const Witness& w, const std::vector<std::string>& labels) {
  const std::size_t n = labels.size();
  std::size_t size = 1;
  for (auto s : w.block_shape) {
    if (s != n) return {};
    size *= s;
  }
  if (size != w.residual.size() || w.block_shape.empty()) return {};
  if (w.block_shape.size() == 1) return format_vector(w.residual_vector(), labels);
  std::string out;
  for (std::size_t flat = 0; flat < size; ++flat) {
    const Rational& c = w.residual[flat];
    if (c.is_zero()) continue;
    std::vector<std::string> parts(w.block_shape.size());
    std::size_t x = flat;
    for (std::size_t k = w.block_shape.size(); k-- > 0;) {
      parts[k] = labels[x % n];
      x /= n;
    }
    std::string term;
    for (std::size_t k = 0; k < parts.size(); ++k) term += (k ? "⊗" : "") + parts[k];
    const bool neg = c < Rational();
    const Rational mag = neg ? -c : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mag != Rational(1)) out += mag.str() + "*";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string format_tensor(const Tensor2& r, const std::vector<std::string>& labels) {
  Witness w;
  w.block_shape = {labels.size(), labels.size()};
  const Matrix m = r.as_matrix();
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b) w.residual.push_back(m(a, b));
  return tensor_terms(w, labels);
}

std::string tuple(const Witness& w, const std::vector<std::string>& labels) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.indices.size(); ++k) {
    if (k) s += ",";
    s += w.indices[k] < labels.size() ? labels[w.indices[k]] : std::to_string(w.indices[k]);
  }
  return s + ")";
}

std::string residual_text(const Witness& w, const std::vector<std::string>& labels) {
  std::string t = tensor_terms(w, labels);
  if (!t.empty()) return t;
  if (w.residual.size() == 1) return w.residual[0].str();
  for (std::size_t i = 0; i < w.residual.size(); ++i) t += (i ? " " : "") + w.residual[i].str();
  return "[" + t + "]";
}

json check_json(const Check& c) {
  json j;
  j["name"] = c.name;
  j["passed"] = c.report.passed;
  j["failure_count"] = c.report.failures.size();
  json fs = json::array();
  for (std::size_t i = 0; i < c.report.failures.size() && i < kMaxListed; ++i) {
    const auto& w = c.report.failures[i];
    json f;
    if (!w.condition.empty()) f["condition"] = w.condition;
    json at = json::array();
    for (auto idx : w.indices) at.push_back(idx < c.labels.size() ? c.labels[idx] : std::to_string(idx));
    f["at"] = at;
    f["residual"] = residual_text(w, c.labels);
    fs.push_back(f);
  }
  j["failures"] = fs;
  return j;
}

void emit(const Outcome& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json j;
    j["command"] = o.command;
    j["passed"] = o.passed();
    json cs = json::array();
    for (const auto& c : o.checks) cs.push_back(check_json(c));
    j["checks"] = cs;
    j["info"] = o.info;
    if (o.document) j["document"] = *o.document;
    if (o.payload) j["result"] = *o.payload;
    out << j.dump(2) << "\n";
    return;
  }
  std::size_t width = 8;
  for (const auto& c : o.checks) width = std::max(width, c.name.size());
  for (const auto& c : o.checks) {
    out << c.name << std::string(width - c.name.size() + 2, ' ') << (c.report.passed ? "pass" : "FAIL");
    if (!c.report.passed) out << "  (" << c.report.failures.size() << " failing)";
    out << "\n";
    for (std::size_t i = 0; i < c.report.failures.size() && i < kMaxListed; ++i) {
      const auto& w = c.report.failures[i];
      out << "    ";
      if (!w.condition.empty()) out << "[" << w.condition << "] ";
      if (!w.indices.empty()) out << tuple(w, c.labels) << ": ";
      out << residual_text(w, c.labels) << "\n";
    }
    if (c.report.failures.size() > kMaxListed) out << "    ...\n";
  }
  for (const auto& [k, v] : o.info.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& l : o.lines) out << l << "\n";
  if (o.document) out << "document:\n" << o.document->dump(2) << "\n";
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto c = s.find(',', start);
    std::string piece = s.substr(start, c == std::string::npos ? std::string::npos : c - start);
    if (!piece.empty()) out.push_back(piece);
    if (c == std::string::npos) break;
    start = c + 1;
  }
  return out;
}

const Comultiplication& need_delta(const AlgebraFile& f) {
  if (!f.delta) throw Error(ErrorKind::Parse, "the file has no \"delta\" block");
  return *f.delta;
}

template <class M>
const typename M::mapped_type& need(const M& m, const std::string& name, const char* block) {
  const auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorKind::Parse, std::string("no entry '") + name + "' in \"" + block + "\"");
  return it->second;
}

Outcome cmd_check(const AlgebraFile& f, const std::string& laws) {
  Outcome o{"check"};
  const auto& L = f.algebra.labels();
  std::vector<std::string> names = split(laws);
  if (names.empty() || names == std::vector<std::string>{"all"}) {
    names.clear();
    for (LawKind l : kAllLaws) names.emplace_back(law_name(l));
  }
  for (const auto& name : names) {
    if (auto law = parse_law(name)) {
      o.checks.push_back({std::string(law_name(*law)), check_law(f.algebra, *law), L});
    } else if (name == "coalgebra") {
      o.checks.push_back({"Coalgebra", check_coalgebra(need_delta(f)), L});
    } else if (name == "coassociative") {
      o.checks.push_back({"Coassociative", check_coassociative(need_delta(f)), L});
    } else if (name == "admissible_coalgebra") {
      o.checks.push_back({"AdmissibleCoalgebra", check_admissible_coalgebra(need_delta(f)), L});
    } else if (name == "bialgebra") {
      o.checks.push_back({"Bialgebra", check_bialgebra(f.algebra, need_delta(f)), L});
    } else {
      throw Error(ErrorKind::Parse, "unknown law '" + name + "'");
    }
  }
  return o;
}

Outcome cmd_classify(const AlgebraFile& f) {
  Outcome o{"classify"};
  o.informational = true;
  for (LawKind l : kAllLaws) {
    const bool ok = check_law(f.algebra, l).passed;
    o.info[std::string(law_name(l))] = ok ? "yes" : "no";
  }
  return o;
}

std::vector<std::string> starred(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l + "*");
  return out;
}

Outcome cmd_double(const AlgebraFile& f) {
  Outcome o{"double"};
  const auto& L = f.algebra.labels();
  const Algebra dual = dual_algebra(need_delta(f), starred(L));
  o.checks.push_back({"A3(A*)", check_law(dual, LawKind::A3), dual.labels()});
  o.checks.push_back({"Admissible(A)", check_law(f.algebra, LawKind::Admissible), L});
  o.checks.push_back({"Admissible(A*)", check_law(dual, LawKind::Admissible), dual.labels()});
  if (!o.passed()) return o;
  const auto dbl = standard_double(f.algebra, dual);
  const auto& D = dbl.algebra.labels();
  const std::size_t n = f.algebra.dim();
  o.checks.push_back({"MatchedPair", check_matched_pair(coadjoint_matched_pair(f.algebra, dual)), D});
  o.checks.push_back({"ManinTriple", check_manin_triple(dbl.algebra, dbl.form, first_block_span(n), second_block_span(n)), D});
  o.checks.push_back({"Bialgebra", check_bialgebra(f.algebra, need_delta(f)), L});
  AlgebraFile out;
  out.algebra = dbl.algebra;
  out.forms.emplace("pairing", dbl.form);
  o.document = algebra_file_json(out);
  return o;
}

Outcome cmd_delta(const AlgebraFile& f, const std::string& rname) {
  Outcome o{"delta"};
  const Tensor2& r = need(f.tensors, rname, "tensors");
  const auto d = delta_from_r(f.algebra, r);
  const auto& L = f.algebra.labels();
  o.checks.push_back({"Coalgebra(Delta_r)", check_coalgebra(d), L});
  o.checks.push_back({"Bialgebra(A, Delta_r)", check_bialgebra(f.algebra, d), L});
  o.info["r skew"] = r == Rational(-1) * tau_swap(r);
  o.info["AY(r) = 0"] = aybe_residual(f.algebra, r).is_zero();
  AlgebraFile out = f;
  out.delta = d;
  o.document = algebra_file_json(out);
  return o;
}

Outcome cmd_aybe(const AlgebraFile& f, const std::string& rname) {
  Outcome o{"aybe"};
  const Tensor2& r = need(f.tensors, rname, "tensors");
  o.checks.push_back({"AYBE", check_aybe(f.algebra, r), f.algebra.labels()});
  const bool skew = r == Rational(-1) * tau_swap(r);
  o.info["r skew"] = skew;
  o.info["AY(r) = 0"] = o.checks.back().report.passed;
  if (skew && check_law(f.algebra, LawKind::Admissible).passed) {
    o.info["r# relative RB for the coadjoint representation"] = check_rb_operator_form(f.algebra, r).passed;
  }
  return o;
}

Outcome cmd_rb2ybe(const AlgebraFile& f, const std::string& mname) {
  Outcome o{"rb2ybe"};
  const Matrix& t = need(f.maps, mname, "maps");
  const auto lift = rb_to_ybe(f.algebra, t);
  o.checks.push_back({"RelativeRB(T, adjoint)",
                      check_relative_rb({f.algebra, adjoint_representation(f.algebra), t}), f.algebra.labels()});
  o.checks.push_back({"AYBE on the double", check_aybe(lift.double_algebra, lift.r), lift.double_algebra.labels()});
  o.info["AY(r) = 0"] = o.checks.back().report.passed ? "true" : "false";
  AlgebraFile out;
  out.algebra = lift.double_algebra;
  out.tensors.emplace("r", lift.r);
  o.document = algebra_file_json(out);
  return o;
}

Outcome cmd_search(const AlgebraFile& f, const std::string& kind, const std::string& grid_text,
                   std::size_t max_solutions) {
  Outcome o{"search"};
  o.informational = true;
  GridSpec grid = grid_text.empty() ? GridSpec{} : GridSpec::parse(grid_text);
  if (max_solutions) grid.max_solutions = max_solutions;
  grid.normalize();
  AlgebraFile shape;
  shape.algebra = f.algebra;
  json sols = json::array();
  if (kind == "rb") {
    const auto found = solve_relative_rb(f.algebra, adjoint_representation(f.algebra), grid);
    for (const auto& m : found) {
      std::string line = "T:";
      for (std::size_t c = 0; c < m.cols(); ++c) {
        line += (c ? ", " : " ") + f.algebra.labels()[c] + " -> " + format_vector(m.column(c), f.algebra.labels());
      }
      o.lines.push_back(line);
      shape.maps = {{"T", m}};
      sols.push_back(algebra_file_json(shape)["maps"]["T"]);
    }
  } else if (kind == "aybe") {
    const auto found = solve_aybe_skew(f.algebra, grid);
    for (const auto& r : found) {
      o.lines.push_back("r = " + format_tensor(r, f.algebra.labels()));
      shape.tensors = {{"r", r}};
      sols.push_back(algebra_file_json(shape)["tensors"]["r"]);
    }
  } else {
    throw Error(ErrorKind::Parse, "search kind must be 'rb' or 'aybe'");
  }
  o.lines.insert(o.lines.begin(), "solutions: " + std::to_string(sols.size()));
  json grid_json = json::array();
  for (const auto& v : grid.values) grid_json.push_back(v.str());
  o.payload = json{{"kind", kind},
                   {"grid", grid_json},
                   {"max_solutions", grid.max_solutions},
                   {"count", sols.size()},
                   {"solutions", sols}};
  return o;
}

bool check_failure(ErrorKind k) {
  switch (k) {
    case ErrorKind::AdmissibilityRequired:
    case ErrorKind::NotSkew:
    case ErrorKind::NotAYBESolution:
    case ErrorKind::PreconditionFailed:
    case ErrorKind::NotInvertible:
    case ErrorKind::SpansNotComplementary:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"a3kit: exact checks for A3-associative algebras"};
  app.require_subcommand(1);
  std::string file, format = "table", laws = "all", rname, mname, kind, grid;
  std::size_t max_solutions = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "algebra file (JSON)")->required();
    sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };
  auto* check = app.add_subcommand("check", "check laws and coalgebra identities");
  add_common(check);
  check->add_option("--laws", laws, "comma list: a3,assoc,poisson,admissible,left,right,lie,coalgebra,"
                                    "coassociative,admissible_coalgebra,bialgebra or all");
  auto* classify = app.add_subcommand("classify", "verdicts for every law");
  add_common(classify);
  auto* dbl = app.add_subcommand("double", "standard double of (A, dual of delta) and its checks");
  add_common(dbl);
  auto* delta = app.add_subcommand("delta", "comultiplication induced by a tensor r");
  add_common(delta);
  delta->add_option("--r", rname, "name in \"tensors\"")->required();
  auto* aybe = app.add_subcommand("aybe", "Yang-Baxter residual of a tensor r");
  add_common(aybe);
  aybe->add_option("--r", rname, "name in \"tensors\"")->required();
  auto* rb2ybe = app.add_subcommand("rb2ybe", "lift a Rota-Baxter operator to a skew solution on the double");
  add_common(rb2ybe);
  rb2ybe->add_option("--map", mname, "name in \"maps\"")->required();
  auto* search = app.add_subcommand("search", "grid search for RB operators or skew solutions");
  add_common(search);
  search->add_option("kind", kind, "rb or aybe")->required()->check(CLI::IsMember({"rb", "aybe"}));
  search->add_option("--grid", grid, "values, e.g. -2..2 or -1,0,1/2");
  search->add_option("--max-solutions", max_solutions, "truncate the list");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const AlgebraFile f = read_algebra_file(file);
    Outcome o;
    if (*check) o = cmd_check(f, laws);
    else if (*classify) o = cmd_classify(f);
    else if (*dbl) o = cmd_double(f);
    else if (*delta) o = cmd_delta(f, rname);
    else if (*aybe) o = cmd_aybe(f, rname);
    else if (*rb2ybe) o = cmd_rb2ybe(f, mname);
    else o = cmd_search(f, kind, grid, max_solutions);
    emit(o, format, out);
    return o.informational || o.passed() ? 0 : 1;
  } catch (const Error& e) {
    if (check_failure(e.kind()) && e.report()) {
      Outcome o{"precondition"};
      o.checks.push_back({e.report()->law_name, *e.report(), {}});
      o.info["error"] = e.what();
      emit(o, format, out);
      return 1;
    }
    err << "error: " << e.what() << "\n";
    return check_failure(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace a3kit::cli
