#include "momentsos/problem_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "momentsos/perturb.hpp"

namespace momentsos {

namespace {

using json = nlohmann::ordered_json;

Rat rat_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return parse_rational(v.dump());
  if (v.is_number_float()) return rat_of_double(v.get<double>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument(where + ": expected a rational (number or string)");
}

Polynomial poly_field(const json& v, int nvars, const std::string& where) {
  if (v.is_string()) {
    try {
      return Polynomial::from_text(v.get<std::string>(), nvars);
    } catch (const std::exception& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  if (!v.is_array()) {
    throw std::invalid_argument(where + ": expected term lines (array or string)");
  }
  Polynomial p(nvars);
  int line_no = 0;
  for (const auto& item : v) {
    ++line_no;
    const std::string tag = where + " line " + std::to_string(line_no);
    if (!item.is_string()) throw std::invalid_argument(tag + ": expected a string");
    std::string line = item.get<std::string>();
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto [m, c] = Polynomial::parse_term_line(line, nvars);
      p.add_term(m, c);
    } catch (const std::exception& e) {
      throw std::invalid_argument(tag + " (\"" + item.get<std::string>() + "\"): " +
                                  e.what());
    }
  }
  return p;
}

json poly_lines(const Polynomial& p) {
  json lines = json::array();
  std::istringstream is(p.to_text());
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

Polynomial make_motzkin() {
  Polynomial f(2);
  f.add_term(Monomial({4, 2}), Rat(1));
  f.add_term(Monomial({2, 4}), Rat(1));
  f.add_term(Monomial({2, 2}), Rat(-1));
  f.add_term(Monomial({0, 0}), Rat(1, 27));
  return f;
}

Polynomial make_univariate(const Rat& gamma) {
  Polynomial x = Polynomial::variable(1, 0);
  Polynomial a = x - Polynomial::constant(1, Rat(100));
  Polynomial b = x - Polynomial::constant(1, Rat(1));
  return a * a * (b * b + Polynomial::constant(1, gamma / Rat(99 * 99)));
}

MomentProblem builtin_problem(const std::string& name, const Rat& gamma) {
  MomentProblem mp;
  if (name == "motzkin") {
    mp.f = make_motzkin();
    mp.order = 8;
  } else if (name == "motzkin-perturbed") {
    mp.f = even_square_perturbation(make_motzkin(), {}, 8, gamma);
    mp.order = 8;
  } else if (name == "univariate") {
    mp.f = make_univariate(gamma);
    mp.order = 3;
  } else {
    throw std::invalid_argument("unknown builtin problem: " + name);
  }
  return mp;
}

MomentProblem parse_problem_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument(origin + ": expected a JSON object");

  auto require = [&](const char* key) -> const json& {
    auto it = doc.find(key);
    if (it == doc.end()) {
      throw std::invalid_argument(origin + ": missing field \"" + key + "\"");
    }
    return *it;
  };

  const json& jv = require("variables");
  if (!jv.is_number_integer() || jv.get<int>() < 1) {
    throw std::invalid_argument(origin + ": \"variables\" must be a positive integer");
  }
  int nvars = jv.get<int>();

  const json& jo = require("order");
  if (!jo.is_number_integer() || jo.get<int>() < 1) {
    throw std::invalid_argument(origin + ": \"order\" must be a positive integer");
  }

  MomentProblem mp;
  mp.f = poly_field(require("objective"), nvars, origin + ": objective");
  mp.order = jo.get<int>();

  if (auto it = doc.find("constraints"); it != doc.end()) {
    if (!it->is_array()) {
      throw std::invalid_argument(origin + ": \"constraints\" must be an array");
    }
    int idx = 0;
    for (const auto& g : *it) {
      ++idx;
      mp.gs.push_back(
          poly_field(g, nvars, origin + ": constraint " + std::to_string(idx)));
    }
  }
  if (auto it = doc.find("ball_N"); it != doc.end()) {
    mp.ball_N = rat_field(*it, origin + ": ball_N");
  }
  if (auto it = doc.find("noise"); it != doc.end()) {
    if (!it->is_object()) {
      throw std::invalid_argument(origin + ": \"noise\" must be an object");
    }
    if (auto e = it->find("epsilon"); e != it->end()) {
      mp.noise.eps = rat_field(*e, origin + ": noise.epsilon");
    }
    if (auto e = it->find("eta"); e != it->end()) {
      mp.noise.eta = rat_field(*e, origin + ": noise.eta");
    }
  }
  mp.validate();
  return mp;
}

MomentProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str(), path);
}

std::string problem_to_text(const MomentProblem& mp) {
  json doc;
  doc["variables"] = mp.nvars();
  doc["objective"] = poly_lines(mp.f);
  if (!mp.gs.empty()) {
    json gs = json::array();
    for (const auto& g : mp.gs) gs.push_back(poly_lines(g));
    doc["constraints"] = gs;
  }
  doc["order"] = mp.order;
  if (mp.ball_N) doc["ball_N"] = format_rational(*mp.ball_N);
  if (mp.noise.eps != 0 || mp.noise.eta != 0) {
    doc["noise"] = {{"epsilon", format_rational(mp.noise.eps)},
                    {"eta", format_rational(mp.noise.eta)}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace momentsos
