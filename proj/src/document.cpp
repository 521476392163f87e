#include "hypal/document.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace hypal {

namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(std::string_view text, const std::string& what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

Rational rational_from_json(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  if (!v.is_string()) throw ParseError(where + ": expected a rational string such as \"1/2\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

Index symbol_index(const std::map<std::string, Index>& index, const std::string& symbol, const std::string& where) {
  auto it = index.find(symbol);
  if (it == index.end()) throw ParseError(where + ": unknown element \"" + symbol + "\"");
  return it->second;
}

}  // namespace

ConvolutionTable parse_document(std::string_view text) { return table_from_json(parse_json(text, "document")); }

ConvolutionTable table_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  std::string name = "unnamed";
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("name: expected a string");
    name = it->get<std::string>();
  }

  const Json& elems = member(doc, "elements", "document");
  if (!elems.is_array() || elems.empty()) throw ParseError("elements: expected a non-empty array of symbols");
  std::vector<std::string> elements;
  std::map<std::string, Index> index;
  for (const auto& e : elems) {
    if (!e.is_string() || e.get<std::string>().empty()) throw ParseError("elements: symbols must be non-empty strings");
    std::string s = e.get<std::string>();
    if (s.find(',') != std::string::npos) throw ParseError("elements: symbol \"" + s + "\" contains a comma");
    if (!index.emplace(s, static_cast<Index>(elements.size())).second)
      throw ParseError("elements: duplicate symbol \"" + s + "\"");
    elements.push_back(std::move(s));
  }
  const auto n = static_cast<Index>(elements.size());

  const Json& inv = member(doc, "involution", "document");
  if (!inv.is_object()) throw ParseError("involution: expected an object mapping symbols to symbols");
  std::vector<Index> involution(static_cast<std::size_t>(n), -1);
  for (const auto& [key, value] : inv.items()) {
    const std::string where = "involution[\"" + key + "\"]";
    Index x = symbol_index(index, key, where);
    if (!value.is_string()) throw ParseError(where + ": expected a symbol");
    involution[static_cast<std::size_t>(x)] = symbol_index(index, value.get<std::string>(), where);
  }
  for (Index x = 0; x < n; ++x)
    if (involution[static_cast<std::size_t>(x)] < 0)
      throw ParseError("involution: no image given for \"" + elements[static_cast<std::size_t>(x)] + "\"");

  const Json& conv = member(doc, "convolution", "document");
  if (!conv.is_object()) throw ParseError("convolution: expected an object keyed by \"x,y\"");
  std::vector<RMatrix> slices(static_cast<std::size_t>(n), RMatrix::Zero(n, n));
  std::vector<std::vector<bool>> given(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (const auto& [key, dist] : conv.items()) {
    const std::string where = "convolution[\"" + key + "\"]";
    auto comma = key.find(',');
    if (comma == std::string::npos) throw ParseError(where + ": key must have the form \"x,y\"");
    Index x = symbol_index(index, key.substr(0, comma), where);
    Index y = symbol_index(index, key.substr(comma + 1), where);
    if (given[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) throw ParseError(where + ": pair given twice");
    given[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
    if (!dist.is_object()) throw ParseError(where + ": expected a distribution {symbol: rational}");
    Rational total(0);
    for (const auto& [zs, value] : dist.items()) {
      const std::string at = where + "[\"" + zs + "\"]";
      Index z = symbol_index(index, zs, at);
      Rational r = rational_from_json(value, at);
      if (r < 0) throw ParseError(at + ": negative weight " + to_string(r));
      slices[static_cast<std::size_t>(x)](z, y) = r;
      total += r;
    }
    if (total != 1) throw ParseError(where + ": distribution sums to " + to_string(total) + ", expected 1");
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (given[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) continue;
      if (x == 0)
        slices[0](y, y) = 1;
      else if (y == 0)
        slices[static_cast<std::size_t>(x)](x, 0) = 1;
      else
        throw ParseError("convolution: missing pair \"" + elements[static_cast<std::size_t>(x)] + "," +
                         elements[static_cast<std::size_t>(y)] + "\"");
    }
  try {
    return ConvolutionTable(std::move(name), std::move(elements), std::move(involution), std::move(slices));
  } catch (const StructureError& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
}

ConvolutionTable read_document(const std::filesystem::path& path) {
  try {
    return parse_document(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(path.filename().string() + ": " + e.what());
  }
}

Json sparse_json(const ConvolutionTable& t, const RVector& v) {
  Json out = Json::object();
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) out[t.symbol(i)] = to_string(v(i));
  return out;
}

Json dense_json(const ConvolutionTable& t, const RVector& v) {
  Json out = Json::object();
  for (Index i = 0; i < v.size(); ++i) out[t.symbol(i)] = to_string(v(i));
  return out;
}

RVector vector_from_json(const ConvolutionTable& t, const Json& obj, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object {symbol: rational}");
  std::map<std::string, Index> index;
  for (Index i = 0; i < t.size(); ++i) index[t.symbol(i)] = i;
  RVector v = RVector::Zero(t.size());
  for (const auto& [key, value] : obj.items())
    v(symbol_index(index, key, where)) = rational_from_json(value, where + "[\"" + key + "\"]");
  return v;
}

Json to_json(const ConvolutionTable& t) {
  Json doc = Json::object();
  doc["name"] = t.name();
  doc["elements"] = t.elements();
  Json inv = Json::object();
  for (Index x = 0; x < t.size(); ++x) inv[t.symbol(x)] = t.symbol(t.involution(x));
  doc["involution"] = std::move(inv);
  Json conv = Json::object();
  for (Index x = 1; x < t.size(); ++x)
    for (Index y = 1; y < t.size(); ++y)
      conv[t.symbol(x) + "," + t.symbol(y)] = sparse_json(t, RVector(t.left(x).col(y)));
  // Identity pairs are implied unless the table disagrees with the identity axiom.
  for (Index k = 0; k < t.size(); ++k) {
    if (t.left(0).col(k) != RVector::Unit(t.size(), k))
      conv[t.symbol(0) + "," + t.symbol(k)] = sparse_json(t, RVector(t.left(0).col(k)));
    if (k > 0 && t.left(k).col(0) != RVector::Unit(t.size(), k))
      conv[t.symbol(k) + "," + t.symbol(0)] = sparse_json(t, RVector(t.left(k).col(0)));
  }
  doc["convolution"] = std::move(conv);
  return doc;
}

std::string serialize_document(const ConvolutionTable& t) { return to_json(t).dump(2) + "\n"; }

FunctionOnH parse_function(const ConvolutionTable& t, const Json& doc) {
  return FunctionOnH(vector_from_json(t, member(doc, "values", "function"), "function.values"));
}

FunctionOnH read_function(const ConvolutionTable& t, const std::filesystem::path& path) {
  return parse_function(t, parse_json(read_text(path), path.filename().string()));
}

GroupTable parse_group(const Json& doc) {
  std::string name = "group";
  if (auto it = doc.find("name"); it != doc.end() && it->is_string()) name = it->get<std::string>();
  const Json& elems = member(doc, "elements", "group");
  if (!elems.is_array() || elems.empty()) throw ParseError("group.elements: expected a non-empty array");
  std::vector<std::string> elements;
  std::map<std::string, Index> index;
  for (const auto& e : elems) {
    if (!e.is_string()) throw ParseError("group.elements: symbols must be strings");
    if (!index.emplace(e.get<std::string>(), static_cast<Index>(elements.size())).second)
      throw ParseError("group.elements: duplicate symbol \"" + e.get<std::string>() + "\"");
    elements.push_back(e.get<std::string>());
  }
  const Json& table = member(doc, "table", "group");
  if (!table.is_array() || table.size() != elements.size())
    throw ParseError("group.table: expected one row per element");
  std::vector<std::vector<Index>> product;
  for (std::size_t x = 0; x < table.size(); ++x) {
    const Json& row = table[x];
    if (!row.is_array() || row.size() != elements.size())
      throw ParseError("group.table[" + std::to_string(x) + "]: expected one entry per element");
    std::vector<Index> r;
    for (std::size_t y = 0; y < row.size(); ++y) {
      const std::string where = "group.table[" + std::to_string(x) + "][" + std::to_string(y) + "]";
      if (!row[y].is_string()) throw ParseError(where + ": expected a symbol");
      r.push_back(symbol_index(index, row[y].get<std::string>(), where));
    }
    product.push_back(std::move(r));
  }
  try {
    return GroupTable(std::move(name), std::move(elements), std::move(product));
  } catch (const StructureError& e) {
    throw ParseError(std::string("group: ") + e.what());
  }
}

GroupTable read_group(const std::filesystem::path& path) {
  return parse_group(parse_json(read_text(path), path.filename().string()));
}

Json to_json(const GroupTable& g) {
  Json doc = Json::object();
  doc["name"] = g.name();
  doc["elements"] = g.elements();
  Json table = Json::array();
  for (Index x = 0; x < g.order(); ++x) {
    Json row = Json::array();
    for (Index y = 0; y < g.order(); ++y) row.push_back(g.elements()[static_cast<std::size_t>(g.multiply(x, y))]);
    table.push_back(std::move(row));
  }
  doc["table"] = std::move(table);
  return doc;
}

std::string decimal_string(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << contents;
    if (!out) throw InputError("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hypal
