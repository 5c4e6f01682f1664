#include "a3kit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "a3kit/error.hpp"

namespace a3kit {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& why) {
  throw Error(ErrorKind::Parse, where + ": " + why);
}

std::string trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return std::string(s);
}

struct Basis {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;

  std::size_t at(const std::string& label, const std::string& where) const {
    const auto it = index.find(label);
    if (it == index.end()) fail(where, "unknown basis label '" + label + "'");
    return it->second;
  }
  std::pair<std::size_t, std::size_t> pair(const std::string& key, const std::string& where) const {
    const auto comma = key.find(',');
    if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos) {
      fail(where, "expected a key of the form \"a,b\", got \"" + key + "\"");
    }
    return {at(trim(std::string_view(key).substr(0, comma)), where),
            at(trim(std::string_view(key).substr(comma + 1)), where)};
  }
};

Rational scalar(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  fail(where, "expected a rational string such as \"1/2\"");
}

const json& object(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where, "expected an object");
  return v;
}

std::string field(const std::string& parent, const std::string& key) {
  return parent + "[\"" + key + "\"]";
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("json", e.what());
  }
  object(doc, "document");
  static const std::vector<std::string> known = {"schema", "dim",  "basis", "products",
                                                 "delta",  "tensors", "maps", "forms"};
  for (const auto& [k, v] : doc.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) fail("document", "unknown field '" + k + "'");
  }
  if (doc.contains("schema")) {
    if (!doc["schema"].is_string() || doc["schema"].get<std::string>() != kAlgebraSchema) {
      fail("schema", "expected \"" + std::string(kAlgebraSchema) + "\"");
    }
  }
  Basis basis;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_array()) fail("basis", "expected a list of labels");
    for (const auto& l : doc["basis"]) {
      if (!l.is_string() || l.get<std::string>().empty()) fail("basis", "labels must be nonempty strings");
      const std::string s = l.get<std::string>();
      if (s.find(',') != std::string::npos) fail("basis", "label '" + s + "' contains a comma");
      basis.labels.push_back(s);
    }
  }
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_unsigned()) fail("dim", "expected a nonnegative integer");
    const auto dim = doc["dim"].get<std::size_t>();
    if (!doc.contains("basis")) {
      basis.labels = Algebra::default_labels(dim);
    } else if (dim != basis.labels.size()) {
      fail("dim", "dim " + std::to_string(dim) + " but " + std::to_string(basis.labels.size()) + " labels");
    }
  } else if (!doc.contains("basis")) {
    fail("document", "needs \"basis\" or \"dim\"");
  }
  for (std::size_t i = 0; i < basis.labels.size(); ++i) {
    if (!basis.index.emplace(basis.labels[i], i).second) fail("basis", "duplicate label '" + basis.labels[i] + "'");
  }
  const std::size_t n = basis.labels.size();

  AlgebraFile f;
  f.algebra = Algebra(basis.labels);
  if (doc.contains("products")) {
    for (const auto& [key, val] : object(doc["products"], "products").items()) {
      const std::string w = field("products", key);
      const auto [i, j] = basis.pair(key, w);
      for (const auto& [lab, q] : object(val, w).items()) f.algebra.sc(i, j, basis.at(lab, w)) = scalar(q, field(w, lab));
    }
  }
  if (doc.contains("delta")) {
    Comultiplication d(n);
    for (const auto& [lab, val] : object(doc["delta"], "delta").items()) {
      const std::string w = field("delta", lab);
      const std::size_t i = basis.at(lab, w);
      for (const auto& [key, q] : object(val, w).items()) {
        const auto [j, k] = basis.pair(key, field(w, key));
        d.dd(i, j, k) = scalar(q, field(w, key));
      }
    }
    f.delta = d;
  }
  auto pairs = [&](const char* block, auto&& put) {
    if (!doc.contains(block)) return;
    for (const auto& [name, val] : object(doc[block], block).items()) {
      const std::string w = field(block, name);
      Matrix m(n, n);
      for (const auto& [key, q] : object(val, w).items()) {
        const auto [a, b] = basis.pair(key, field(w, key));
        m(a, b) = scalar(q, field(w, key));
      }
      put(name, m);
    }
  };
  pairs("tensors", [&](const std::string& name, const Matrix& m) { f.tensors.emplace(name, Tensor2::from_matrix(m)); });
  pairs("forms", [&](const std::string& name, const Matrix& m) { f.forms.emplace(name, BilinearForm(m)); });
  if (doc.contains("maps")) {
    for (const auto& [name, val] : object(doc["maps"], "maps").items()) {
      const std::string w = field("maps", name);
      Matrix m(n, n);
      for (const auto& [src, img] : object(val, w).items()) {
        const std::string ws = field(w, src);
        const std::size_t c = basis.at(src, ws);
        for (const auto& [dst, q] : object(img, ws).items()) m(basis.at(dst, ws), c) = scalar(q, field(ws, dst));
      }
      f.maps.emplace(name, m);
    }
  }
  return f;
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra_file(ss.str());
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

json algebra_file_json(const AlgebraFile& f) {
  const auto& L = f.algebra.labels();
  const std::size_t n = f.algebra.dim();
  json doc;
  doc["schema"] = kAlgebraSchema;
  doc["dim"] = n;
  doc["basis"] = L;
  json products = json::object();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      json v = json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (!f.algebra.sc(i, j, k).is_zero()) v[L[k]] = f.algebra.sc(i, j, k).str();
      if (!v.empty()) products[L[i] + "," + L[j]] = v;
    }
  doc["products"] = products;
  auto pairs = [&](const Matrix& m) {
    json v = json::object();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!m(a, b).is_zero()) v[L[a] + "," + L[b]] = m(a, b).str();
    return v;
  };
  if (f.delta) {
    json d = json::object();
    for (std::size_t i = 0; i < n; ++i) {
      json v = pairs(f.delta->of_basis(i).as_matrix());
      if (!v.empty()) d[L[i]] = v;
    }
    doc["delta"] = d;
  }
  if (!f.tensors.empty()) {
    json t = json::object();
    for (const auto& [name, r] : f.tensors) t[name] = pairs(r.as_matrix());
    doc["tensors"] = t;
  }
  if (!f.forms.empty()) {
    json t = json::object();
    for (const auto& [name, b] : f.forms) t[name] = pairs(b.gram);
    doc["forms"] = t;
  }
  if (!f.maps.empty()) {
    json t = json::object();
    for (const auto& [name, m] : f.maps) {
      json v = json::object();
      for (std::size_t c = 0; c < n; ++c) {
        json img = json::object();
        for (std::size_t r = 0; r < n; ++r)
          if (!m(r, c).is_zero()) img[L[r]] = m(r, c).str();
        if (!img.empty()) v[L[c]] = img;
      }
      t[name] = v;
    }
    doc["maps"] = t;
  }
  return doc;
}

std::string write_algebra_file(const AlgebraFile& f) { return algebra_file_json(f).dump(2) + "\n"; }

std::string format_vector(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const Rational& c = v[i];
    if (c.is_zero()) continue;
    const bool neg = c < Rational();
    const Rational mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

json witness_json(const Witness& w, const std::vector<std::vector<std::string>>& index_labels,
                  const std::vector<std::string>* block_labels) {
  json j;
  if (!w.condition.empty()) j["condition"] = w.condition;
  json at = json::array();
  for (std::size_t k = 0; k < w.indices.size(); ++k) {
    at.push_back(k < index_labels.size() ? index_labels[k][w.indices[k]] : std::to_string(w.indices[k]));
  }
  j["at"] = at;
  if (block_labels && w.residual.size() == block_labels->size()) {
    j["residual"] = format_vector(w.residual_vector(), *block_labels);
  } else {
    json r = json::array();
    for (const auto& q : w.residual) r.push_back(q.str());
    j["residual"] = r;
  }
  return j;
}

}  // namespace a3kit
