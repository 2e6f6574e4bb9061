// Rewrites the checksum of a catalog file after hand edits.
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "wanas/catalog.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: stamp_catalog <catalog.json>\n";
    return 2;
  }
  nlohmann::json doc;
  {
    std::ifstream in(argv[1]);
    if (!in) {
      std::cerr << "cannot open " << argv[1] << '\n';
      return 2;
    }
    doc = nlohmann::json::parse(in);
  }
  doc = wanas::stamp_catalog(std::move(doc));
  try {
    (void)wanas::Catalog::from_json(doc);
  } catch (const wanas::Error& e) {
    std::cerr << "catalog does not load: " << e.what() << '\n';
    return 1;
  }
  std::ofstream(argv[1]) << doc.dump(2) << '\n';
  std::cout << doc["checksum"].get<std::string>() << '\n';
  return 0;
}
