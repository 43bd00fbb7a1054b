// Count lattice points of marked polytopes against the Weyl dimension
// formula for a few small weights.

#include <mcop/rep.hpp>

#include <cstdio>
#include <string>

using namespace mcop;

namespace {
std::string weight_str(const Weight& w) {
  std::string out = "(";
  for (std::size_t t = 0; t < w.size(); ++t) out += (t ? "," : "") + std::to_string(w[t]);
  return out + ")";
}
}  // namespace

int main() {
  for (Kind kind : {Kind::A, Kind::C}) {
    const int n = 3;
    Poset p = build_poset(kind, n);
    auto strata = enumerate_ideals(p);
    std::printf("kind %s, n=%d, marking P\n", kind_name(kind).c_str(), n);
    for (Weight lambda : {Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{1, 1, 0}}) {
      lambda.resize(weight_length(p));
      auto pts = lattice_points(p, p.full_mask(), lambda, strata);
      Int dim = weyl_dim(kind, n, lambda);
      std::printf("  lambda=%s: %zu lattice points, dimension %s\n", weight_str(lambda).c_str(),
                  pts.size(), dim.get_str().c_str());
      if (Int(static_cast<long>(pts.size())) != dim) return 1;
    }
  }
  return 0;
}
