// Regenerates the shipped fixture files from the in-code corpus.
//   make_fixtures <fixtures-dir>

#include "hypal/document.hpp"

#include <iostream>

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <fixtures-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir / "groups");
  for (const auto& g : hypal::golden_suite())
    hypal::write_file_atomically(dir / (g.file_stem + ".json"), hypal::serialize_document(g.hypergroup.table()));
  for (const auto& n : hypal::negative_fixtures())
    hypal::write_file_atomically(dir / (n.file_stem + ".json"), hypal::serialize_document(n.table));
  for (const auto& g : {hypal::cyclic_group(3), hypal::symmetric_group_3(), hypal::dihedral_group_4(),
                        hypal::quaternion_group()}) {
    std::string stem = g.name();
    for (auto& c : stem) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    hypal::write_file_atomically(dir / "groups" / (stem + ".json"), hypal::to_json(g).dump(2) + "\n");
  }
  return 0;
}
