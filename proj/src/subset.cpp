#include "sperner/subset.hpp"

#include "sperner/errors.hpp"

namespace sperner {

Subset Subset::range(std::size_t first, std::size_t count) {
  if (first + count > kMaxGround) throw ResourceLimit("subset coordinate beyond ground-set cap");
  Subset s;
  for (std::size_t c = first; c < first + count; ++c) s.insert(c);
  return s;
}

std::vector<std::size_t> Subset::coordinates() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto c : coordinates()) {
    if (!first) out += ',';
    out += std::to_string(c + 1);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace sperner
