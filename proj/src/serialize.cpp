#include "sigkit/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sigkit {

namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

std::string word_key(const Word& w) {
  if (w.letters.empty()) return "()";
  std::string key;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(w.letters[i]);
  }
  return key;
}

Word parse_word_key(const std::string& key) {
  if (key == "()") return Word{};
  std::vector<int> letters;
  std::stringstream in(key);
  std::string token;
  while (std::getline(in, token, ','))
    letters.push_back(std::stoi(token));
  return Word(std::move(letters));
}

}  // namespace

std::string tensor_to_text(const TruncatedTensor& t) {
  std::ostringstream out;
  out << "():" << format_double(t.scalar()) << '\n';
  for (int len = 1; len <= t.level(); ++len) {
    const auto& data = t.level_data(len);
    for (std::size_t idx = 0; idx < data.size(); ++idx) {
      if (data[idx] == 0.0) continue;
      out << word_key(TruncatedTensor::index_word(t.dim(), len, idx)) << ':'
          << format_double(data[idx]) << '\n';
    }
  }
  return out.str();
}

TruncatedTensor tensor_from_text(const std::string& text, int dim, int level) {
  TruncatedTensor t(dim, level);
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t colon = line.rfind(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("malformed tensor line: " + line);
    t.set_coeff(parse_word_key(line.substr(0, colon)),
                std::stod(line.substr(colon + 1)));
  }
  return t;
}

std::string path_to_json(const PiecewiseLinearPath& x) {
  nlohmann::json j;
  j["dim"] = x.dim();
  j["horizon"] = x.horizon();
  j["times"] = x.times();
  j["points"] = x.points();
  return j.dump(2) + "\n";
}

PiecewiseLinearPath path_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  return PiecewiseLinearPath(j.at("dim").get<int>(),
                             j.at("horizon").get<double>(),
                             j.at("times").get<std::vector<double>>(),
                             j.at("points").get<std::vector<Vec>>());
}

std::string path_to_csv(const PiecewiseLinearPath& x) {
  std::ostringstream out;
  out << "t";
  for (int i = 1; i <= x.dim(); ++i) out << ",x" << i;
  out << '\n';
  for (std::size_t row = 0; row < x.times().size(); ++row) {
    out << format_double(x.times()[row]);
    for (double v : x.points()[row]) out << ',' << format_double(v);
    out << '\n';
  }
  return out.str();
}

PiecewiseLinearPath path_from_csv(const std::string& text) {
  std::stringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,", 0) != 0)
    throw std::invalid_argument("csv path file needs header t,x1,...,xd");
  const int dim =
      static_cast<int>(std::count(line.begin(), line.end(), ','));
  std::vector<double> times;
  std::vector<Vec> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string token;
    if (!std::getline(row, token, ','))
      throw std::invalid_argument("malformed csv row: " + line);
    times.push_back(std::stod(token));
    Vec point;
    while (std::getline(row, token, ',')) point.push_back(std::stod(token));
    if (static_cast<int>(point.size()) != dim)
      throw std::invalid_argument("csv row width mismatch: " + line);
    points.push_back(std::move(point));
  }
  if (times.empty()) throw std::invalid_argument("csv path file has no rows");
  const double horizon = times.back() > 0 ? times.back() : 1.0;
  return PiecewiseLinearPath(dim, horizon, std::move(times),
                             std::move(points));
}

PiecewiseLinearPath load_path_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw std::invalid_argument("cannot open path file: " + filename);
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (filename.size() >= 4 &&
      filename.compare(filename.size() - 4, 4, ".csv") == 0)
    return path_from_csv(buffer.str());
  return path_from_json(buffer.str());
}

void save_path_file(const PiecewiseLinearPath& x, const std::string& filename) {
  std::ofstream out(filename);
  if (!out) throw std::invalid_argument("cannot write path file: " + filename);
  if (filename.size() >= 4 &&
      filename.compare(filename.size() - 4, 4, ".csv") == 0)
    out << path_to_csv(x);
  else
    out << path_to_json(x);
}

}  // namespace sigkit
