#include "graphlab/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace graphlab {

using nlohmann::ordered_json;

namespace {

BigInt parse_big(const ordered_json& field, std::string_view what) {
  if (!field.is_string()) {
    throw std::invalid_argument(std::string(what) + " must be a decimal string");
  }
  BigInt out;
  if (out.set_str(field.get<std::string>(), 10) != 0) {
    throw std::invalid_argument(std::string(what) + " is not a decimal integer");
  }
  return out;
}

BigRational parse_fraction(const ordered_json& doc) {
  const BigInt num = parse_big(doc.at("num"), "num");
  const BigInt den = parse_big(doc.at("den"), "den");
  if (den <= 0) {
    throw std::invalid_argument("den must be positive");
  }
  BigRational value(num, den);
  if (value.numerator() != num || value.denominator() != den) {
    throw std::invalid_argument("fraction " + num.get_str() + "/" + den.get_str() + " is not in lowest terms");
  }
  return value;
}

std::string escape_dot(const std::string& text) {
  std::string out;
  for (const char c : text) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

template <typename LabelOf>
std::string dot_document(const std::string& name, std::size_t order, const std::vector<Edge>& edges,
                         LabelOf label_of) {
  std::ostringstream out;
  out << "graph \"" << escape_dot(name) << "\" {\n";
  for (std::size_t v = 0; v < order; ++v) {
    out << "  v" << v << " [label=\"" << escape_dot(label_of(v)) << "\"];\n";
  }
  for (const Edge& e : edges) {
    out << "  v" << e.u << " -- v" << e.v << ";\n";
  }
  out << "}\n";
  return out.str();
}

ordered_json edge_array(const std::vector<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) {
    out.push_back({e.u, e.v});
  }
  return out;
}

}  // namespace

ordered_json to_json(const IndexValue& value) {
  ordered_json out;
  out["kind"] = std::string(kind_name(value.kind()));
  switch (value.kind()) {
    case IndexValue::Kind::integer:
      out["value"] = value.as_integer().get_str();
      break;
    case IndexValue::Kind::rational:
      out["num"] = value.as_rational().numerator().get_str();
      out["den"] = value.as_rational().denominator().get_str();
      break;
    case IndexValue::Kind::radical: {
      ordered_json terms = ordered_json::array();
      for (const auto& [radicand, coefficient] : value.as_radical().terms()) {
        ordered_json term;
        term["num"] = coefficient.numerator().get_str();
        term["den"] = coefficient.denominator().get_str();
        term["radicand"] = radicand;
        terms.push_back(std::move(term));
      }
      out["terms"] = std::move(terms);
      out["approx"] = to_decimal(value, kApproxDigits);
      break;
    }
  }
  return out;
}

IndexValue index_value_from_json(const ordered_json& doc) {
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "integer") {
      return parse_big(doc.at("value"), "value");
    }
    if (kind == "rational") {
      const BigRational value = parse_fraction(doc);
      if (value.is_integer()) {
        throw std::invalid_argument("rational value is integral");
      }
      return value;
    }
    if (kind == "radical") {
      RadicalSum sum;
      std::uint64_t previous = 0;
      for (const auto& term : doc.at("terms")) {
        const auto radicand = term.at("radicand").get<std::uint64_t>();
        if (radicand <= previous || !is_squarefree(radicand)) {
          throw std::invalid_argument("radicands must be squarefree and strictly increasing");
        }
        const BigRational coefficient = parse_fraction(term);
        if (coefficient.is_zero()) {
          throw std::invalid_argument("zero coefficient in radical term");
        }
        sum += RadicalSum::term(coefficient, radicand);
        previous = radicand;
      }
      if (sum.is_rational()) {
        throw std::invalid_argument("radical value has no irrational term");
      }
      return sum;
    }
    throw std::invalid_argument("unknown value kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed index value: ") + e.what());
  }
}

ordered_json graph_to_json(const DprimeGraph& g) {
  ordered_json out;
  out["k"] = g.k();
  ordered_json vertices = ordered_json::array();
  for (std::size_t v = 0; v < g.order(); ++v) {
    const Divisor d = g.vertex(v);
    ordered_json entry;
    ordered_json subset = ordered_json::array();
    for (unsigned i = 0; i < g.k(); ++i) {
      if ((d.subset >> i) & 1U) {
        subset.push_back(i + 1);
      }
    }
    entry["subset"] = std::move(subset);
    entry["omega"] = d.omega();
    if (d.value) {
      entry["value"] = d.value->get_str();
    }
    vertices.push_back(std::move(entry));
  }
  out["vertices"] = std::move(vertices);
  out["edges"] = edge_array(g.edges());
  return out;
}

ordered_json graph_to_json(const GeneralDivisorGraph& g) {
  ordered_json out;
  out["n"] = std::to_string(g.n());
  ordered_json vertices = ordered_json::array();
  for (const auto d : g.divisors()) {
    vertices.push_back({{"value", std::to_string(d)}});
  }
  out["vertices"] = std::move(vertices);
  out["edges"] = edge_array(g.graph().edges());
  return out;
}

std::string graph_to_dot(const DprimeGraph& g) {
  return dot_document("gamma_" + std::to_string(g.k()), g.order(), g.edges(),
                      [&](std::size_t v) { return g.label(v); });
}

std::string graph_to_dot(const GeneralDivisorGraph& g) {
  return dot_document("divisor_" + std::to_string(g.n()), g.order(), g.graph().edges(),
                      [&](std::size_t v) { return g.graph().label(v); });
}

std::string distance_matrix_csv(const DistanceMatrix& d, const std::vector<std::string>& labels) {
  if (labels.size() != d.order()) {
    throw std::invalid_argument("distance_matrix_csv: label count does not match order");
  }
  std::ostringstream out;
  out << "vertex";
  for (const auto& label : labels) {
    out << ',' << label;
  }
  out << '\n';
  for (std::size_t u = 0; u < d.order(); ++u) {
    out << labels[u];
    for (std::size_t v = 0; v < d.order(); ++v) {
      out << ',' << static_cast<unsigned>(d.at(u, v));
    }
    out << '\n';
  }
  return out.str();
}

ordered_json index_report_json(const ordered_json& graph_descriptor, const IndexReport& report) {
  ordered_json out;
  out["graph"] = graph_descriptor;
  ordered_json indices = ordered_json::object();
  for (const auto& [id, value] : report) {
    indices[std::string(index_name(id))] = to_json(value);
  }
  out["indices"] = std::move(indices);
  return out;
}

std::string index_report_table(const IndexReport& report) {
  std::size_t name_width = 5;
  std::size_t exact_width = 5;
  for (const auto& [id, value] : report) {
    name_width = std::max(name_width, index_name(id).size());
    exact_width = std::max(exact_width, value.to_string().size());
  }
  std::ostringstream out;
  auto pad = [](std::string text, std::size_t width) {
    text.resize(std::max(width, text.size()), ' ');
    return text;
  };
  out << pad("index", name_width) << "  " << pad("exact", exact_width) << "  approx\n";
  for (const auto& [id, value] : report) {
    const std::string approx = value.kind() == IndexValue::Kind::integer
                                   ? value.as_integer().get_str()
                                   : to_decimal(value, kApproxDigits);
    out << pad(std::string(index_name(id)), name_width) << "  " << pad(value.to_string(), exact_width) << "  "
        << approx << '\n';
  }
  return out.str();
}

}  // namespace graphlab
