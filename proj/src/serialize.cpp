#include "xsperner/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace xsperner {

nlohmann::json family_to_json(const Family& f) {
  std::vector<std::vector<int>> sets;
  sets.reserve(f.size());
  f.for_each_member([&](std::uint32_t m) {
    sets.push_back(SetWord(m, f.n()).elements());
  });
  std::sort(sets.begin(), sets.end());
  return nlohmann::json{{"n", f.n()}, {"sets", sets}};
}

Family family_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  return Family::from_sets(n, j.at("sets").get<std::vector<std::vector<int>>>());
}

std::string family_to_hex(const Family& f) {
  static const char digits[] = "0123456789abcdef";
  const std::uint32_t u = f.universe_size();
  const std::uint32_t ndigits = (u + 3) / 4;
  std::string out(ndigits, '0');
  f.for_each_member([&](std::uint32_t m) {
    const std::uint32_t d = m >> 2;
    const int v = out[d] <= '9' ? out[d] - '0' : out[d] - 'a' + 10;
    out[d] = digits[v | (1 << (m & 3))];
  });
  return out;
}

Family family_from_hex(int n, const std::string& hex) {
  Family f(n);
  const std::uint32_t u = f.universe_size();
  const std::uint32_t ndigits = (u + 3) / 4;
  if (hex.size() != ndigits)
    throw std::invalid_argument("family_from_hex: wrong string length for n");
  for (std::uint32_t d = 0; d < ndigits; ++d) {
    const char c = hex[d];
    int v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = c - 'a' + 10;
    else
      throw std::invalid_argument("family_from_hex: invalid hex digit");
    for (int b = 0; b < 4; ++b) {
      const std::uint32_t mask = 4 * d + static_cast<std::uint32_t>(b);
      if ((v >> b) & 1) {
        if (mask >= u)
          throw std::invalid_argument("family_from_hex: bit above 2^n");
        f.add(mask);
      }
    }
  }
  return f;
}

}  // namespace xsperner
