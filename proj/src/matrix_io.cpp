#include "gcmlab/matrix_io.hpp"

#include "gcmlab/errors.hpp"

namespace gcm {

nlohmann::ordered_json matrix_to_json(const QMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("matrix_to_json: matrix must be square");
  nlohmann::ordered_json j;
  j["n"] = a.rows();
  auto entries = nlohmann::ordered_json::array();
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      const Quat& q = a(r, c);
      entries.push_back({q.re, q.im_i, q.im_j, q.im_k});
    }
  j["entries"] = std::move(entries);
  return j;
}

QMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw ParseError("matrix literal: expected an object with \"n\" and \"entries\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw ParseError("matrix literal: \"n\" must be a positive integer");
  const int n = j["n"].get<int>();
  const auto& entries = j["entries"];
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * n)
    throw ParseError("matrix literal: \"entries\" must hold n*n rows-major entries");
  QMatrix a(n, n);
  std::size_t t = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c, ++t) {
      const auto& e = entries[t];
      if (!e.is_array() || e.size() != 4 || !e[0].is_number() || !e[1].is_number() ||
          !e[2].is_number() || !e[3].is_number())
        throw ParseError("matrix literal: each entry must be [re, im_i, im_j, im_k]");
      a(r, c) = Quat(e[0].get<double>(), e[1].get<double>(), e[2].get<double>(), e[3].get<double>());
    }
  return a;
}

QMatrix matrix_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("matrix literal: invalid JSON");
  return matrix_from_json(j);
}

}  // namespace gcm
