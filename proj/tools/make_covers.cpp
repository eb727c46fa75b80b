#include <fstream>
#include <iostream>
#include <string>

#include "ramiforge/cover.hpp"

using namespace ramiforge;

namespace {

int write_file(const std::string& dir, const std::string& name, const CoverData& cover) {
  std::string path = dir + "/" + name + ".json";
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 1;
  }
  out << save_cover_json(cover);
  std::cout << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  int rc = 0;

  rc |= write_file(dir, "quad_t", make_quadratic_cover({PolyQ::linear_root(Rat(0))}, "quad_t"));
  rc |= write_file(dir, "quad_t2p1",
                   make_quadratic_cover({PolyQ({Rat(1), Rat(0), Rat(1)})}, "quad_t2p1"));
  rc |= write_file(dir, "quad_t2p1_t2m2",
                   make_quadratic_cover({PolyQ({Rat(1), Rat(0), Rat(1)}),
                                         PolyQ({Rat(-2), Rat(0), Rat(1)})},
                                        "quad_t2p1_t2m2"));
  rc |= write_file(dir, "trinomial_3_1_2_1", make_trinomial_cover(3, 1, 2, 1));
  rc |= write_file(dir, "trinomial_5_2_2_1", make_trinomial_cover(5, 2, 2, 1));
  rc |= write_file(dir, "monster", make_monster_cover());
  rc |= write_file(dir, "mestre_a5", make_mestre_a5_cover());

  PermGroup s5(5, {Perm::from_cycles(5, {{1, 2}}), Perm::from_cycles(5, {{1, 2, 3, 4, 5}})});
  rc |= write_file(dir, "synthetic_s5",
                   make_synthetic_cover("synthetic_s5", std::move(s5),
                                        {{Rat(0), "[5^1]"},
                                         {Rat(1), "[1^1 4^1]"},
                                         {Rat(-1), "[1^3 2^1]"}}));
  return rc;
}
