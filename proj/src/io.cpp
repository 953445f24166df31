#include "chevorbit/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "chevorbit/error.hpp"

namespace chevorbit {

using nlohmann::ordered_json;

std::string root_label(const Root& r) {
  std::string s = r.is_positive() ? "" : "-";
  for (int c : r.coeffs) s += std::to_string(c < 0 ? -c : c);
  return s;
}

namespace {

ordered_json root_list(const RootSystem& rs, const std::vector<RootIndex>& idx) {
  ordered_json a = ordered_json::array();
  for (RootIndex i : idx) a.push_back(rs.root(i).coeffs);
  return a;
}

const char* level_class(int level) {
  switch (level) {
    case 2: return "delta";
    case 1: return "phi1";
    case 0: return "phi0";
    case -1: return "phi-1";
    default: return "-delta";
  }
}

}  // namespace

ordered_json root_system_json(const RootSystem& rs) {
  ordered_json j;
  j["family"] = std::string(1, family_letter(rs.family()));
  j["rank"] = rs.rank();
  j["cartan"] = rs.cartan();
  j["root_count"] = rs.size();
  std::vector<RootIndex> all(rs.size());
  for (int i = 0; i < rs.size(); ++i) all[i] = i;
  j["roots"] = root_list(rs, all);
  j["delta"] = rs.root(rs.delta()).coeffs;
  j["phi0"] = root_list(rs, rs.phi0());
  j["phi1"] = root_list(rs, rs.phi1());
  return j;
}

std::string root_system_text(const RootSystem& rs) {
  std::ostringstream os;
  os << rs.name() << ": " << rs.size() << " roots, " << rs.positive_count() << " positive\n";
  os << "cartan:\n";
  for (const auto& row : rs.cartan()) {
    os << " ";
    for (int c : row) os << (c < 0 ? " " : "  ") << c;
    os << "\n";
  }
  os << "delta: " << root_label(rs.root(rs.delta())) << "\n";
  os << "roots:";
  for (const auto& r : rs.roots()) os << " " << root_label(r);
  os << "\nphi0 (" << rs.phi0().size() << "):";
  for (RootIndex i : rs.phi0()) os << " " << root_label(rs.root(i));
  os << "\nphi1 (" << rs.phi1().size() << "):";
  if (rs.phi1().empty()) os << " empty";
  for (RootIndex i : rs.phi1()) os << " " << root_label(rs.root(i));
  os << "\n";
  return os.str();
}

std::string root_system_csv(const RootSystem& rs) {
  std::ostringstream os;
  os << "index,root,height,level,class,phi1_position\n";
  for (RootIndex i = 0; i < rs.size(); ++i) {
    const Root& r = rs.root(i);
    os << i << "," << root_label(r) << "," << r.height() << "," << rs.level(i) << "," << level_class(rs.level(i))
       << "," << rs.phi1_position(i) << "\n";
  }
  return os.str();
}

ordered_json check_json(const CheckCount& c) { return {{"pass", c.pass}, {"fail", c.fail}}; }

ordered_json descriptor_json(const OrbitDescriptor& d) {
  ordered_json j;
  j["family"] = std::string(1, family_letter(d.family));
  j["rank"] = d.rank;
  j["p"] = d.p;
  j["label"] = label_name(d.label);
  ordered_json params = ordered_json::object();
  for (const auto& p : d.params) {
    if (p.kind == ParamKind::Scalar) params[p.name] = p.value;
    else params[p.name] = std::to_string(p.value);
  }
  j["params"] = params;
  return j;
}

std::string vector_csv(const V1Vector& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  return s;
}

V1Vector parse_vector(std::string_view text) {
  V1Vector x;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return x;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    Scalar v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw Error(Errc::InvalidVector, "not an integer: '" + std::string(item) + "'");
    x.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return x;
}

ordered_json census_json(const OrbitCensus& census) {
  ordered_json j;
  j["family"] = std::string(1, family_letter(census.family));
  j["rank"] = census.rank;
  j["p"] = census.p;
  j["total_states"] = census.total_states;
  j["orbit_count"] = census.orbits.size();
  ordered_json orbits = ordered_json::array();
  for (const auto& o : census.orbits)
    orbits.push_back({{"representative", vector_csv(o.representative)},
                      {"size", o.size},
                      {"descriptor", descriptor_json(o.descriptor)}});
  j["orbits"] = orbits;
  return j;
}

std::string census_csv(const OrbitCensus& census) {
  std::ostringstream os;
  os << "label,params,size,representative\n";
  for (const auto& o : census.orbits) {
    std::string params;
    for (const auto& p : o.descriptor.params) {
      if (!params.empty()) params += ';';
      params += p.name + "=" + std::to_string(p.value);
    }
    os << label_name(o.descriptor.label) << "," << params << "," << o.size << ",\"" << vector_csv(o.representative)
       << "\"\n";
  }
  return os.str();
}

ordered_json crosscheck_json(const CrosscheckReport& r) {
  ordered_json j;
  j["ok"] = r.ok;
  j["states_classified"] = r.states_classified;
  j["representative_pairs"] = r.representative_pairs;
  j["random_pairs"] = r.random_pairs;
  if (!r.ok) {
    j["failure"] = r.failure;
    if (r.witness) j["witness"] = vector_csv(*r.witness);
  }
  return j;
}

}  // namespace chevorbit
