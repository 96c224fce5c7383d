// Writes the fixture tree from the built-in catalog, or with --check compares it byte for byte.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "levikit/catalog.hpp"
#include "levikit/cohomology.hpp"
#include "levikit/error.hpp"
#include "levikit/io.hpp"

using namespace levikit;
namespace fs = std::filesystem;

namespace {

std::vector<std::pair<std::string, io::Json>> fixtures() {
  std::vector<std::pair<std::string, io::Json>> out;
  auto add = [&](std::string name, io::Json j) { out.emplace_back(std::move(name), std::move(j)); };

  add("s3_block.alg", io::algebra_to_json(catalog::s3_block()));
  add("s3.grading", io::grading_to_json(catalog::s3_block_grading()));
  add("l6.alg", io::algebra_to_json(catalog::l6()));
  add("sweedler_action.act", io::module_to_json(catalog::sweedler_action_l6()));
  add("h4.hopf", io::hopf_to_json(sweedler4()));
  add("l7.alg", io::algebra_to_json(catalog::l7()));
  add("hnoninv.alg", io::algebra_to_json(catalog::hnoninv()));
  add("hnoninv.aut", io::automorphism_to_json(catalog::hnoninv_automorphism()));
  add("gl2.alg", io::algebra_to_json(catalog::gl2()));
  add("gl2_identity.aut", io::automorphism_to_json(CyclicAction{Matrix::identity(4)}));
  add("sl2.alg", io::algebra_to_json(catalog::sl2()));
  add("sl2_natural.rep", io::representation_to_json(catalog::sl2_natural()));
  add("sl2_natural_semidirect.alg", io::algebra_to_json(catalog::sl2_natural_semidirect()));
  add("l_aff.alg", io::algebra_to_json(catalog::l_aff()));
  add("heisenberg.alg", io::algebra_to_json(catalog::heisenberg()));
  add("sl2_pair_swap.alg", io::algebra_to_json(catalog::sl2_pair_swap()));
  add("swap.grading", io::grading_to_json(catalog::sl2_pair_swap_grading()));
  Matrix swap = Matrix::identity(6);
  for (size_t i = 3; i < 6; ++i) swap(i, i) = -1;
  add("sl2_pair_swap.aut", io::automorphism_to_json(CyclicAction{swap}));
  add("sl2_pair_bracket.cochain", io::cochain_to_json(bracket_cochain(catalog::sl2_pair_swap())));
  add("sl2_bracket.cochain", io::cochain_to_json(bracket_cochain(catalog::sl2())));
  add("s3.group", io::group_to_json(GroupBackend::symmetric3()));
  add("z2.group", io::group_to_json(GroupBackend::cyclic(2)));
  add("s3.hopf", io::hopf_to_json(*group_algebra(GroupBackend::symmetric3()).hopf));
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixture tree generator"};
  std::string dir;
  bool check = false;
  app.add_option("dir", dir, "fixture directory")->required();
  app.add_flag("--check", check, "compare instead of writing");
  CLI11_PARSE(app, argc, argv);

  try {
    int mismatches = 0;
    if (!check) fs::create_directories(dir);
    for (const auto& [name, json] : fixtures()) {
      const fs::path path = fs::path(dir) / name;
      const std::string text = io::dump(json);
      if (!check) {
        io::write_text(path, text);
      } else if (!fs::exists(path) || slurp(path) != text) {
        std::cerr << "fixture differs from the catalog: " << path.string() << "\n";
        ++mismatches;
      }
    }
    return mismatches == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
