// Build a marked set, trace its pipe dream, and show the twisted permutation
// of an order ideal.

#include <mcop/pipedream.hpp>

#include <cstdio>

using namespace mcop;

int main() {
  Poset p = build_poset(Kind::A, 4);
  std::uint64_t m = 0;
  for (Elem e : {Elem{1, 1}, Elem{2, 2}, Elem{1, 2}, Elem{2, 3}, Elem{1, 4}})
    m |= std::uint64_t{1} << p.index(e.i, e.j);

  std::fputs(render_pipe_dream(p, m, RenderFormat::Ascii).c_str(), stdout);

  // Every order ideal J gives a tuple through the twisted permutation of its
  // marked set M_O(J); here O is the diagonal marking.
  auto strata = enumerate_ideals(p);
  for (const Ideal& j : strata[2]) {
    auto tuple = ideal_tuple(p, p.diagonal_mask(), j);
    std::printf("stratum 2 ideal %#06llx -> tuple %s\n",
                static_cast<unsigned long long>(j.mask), one_line(tuple).c_str());
  }
  return 0;
}
