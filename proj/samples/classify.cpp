// Reads a tensor in the shared JSON format and prints every simplicity test.
//
//   sample_classify samples/data/example4.json

#include <iostream>

#include "srank/io.hpp"
#include "srank/srank.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: sample_classify tensor.json\n";
    return 1;
  }
  try {
    const auto u = srank::io::tensor_from_json(srank::io::read_json_file(argv[1]));
    const auto verdict = srank::classify(u);
    std::cout << "class         " << srank::to_string(u.symmetry()) << "\n"
              << "s-rank        " << verdict.s_rank << " (minimal " << verdict.minimal_rank << ")\n"
              << "tensor square " << (srank::tensor_square_test(u) ? "fixed" : "moved") << "\n"
              << "witness       " << (verdict.witness ? "found" : "none") << "\n";
    if (verdict.score) std::cout << "overlap       " << *verdict.score << "\n";
    if (u.order() == 2 && u.symmetry() != srank::Symmetry::general) {
      const auto d = srank::slater(u);
      std::cout << "slater rank   " << d.rank() << "\n";
    }
    std::cout << (verdict.simple ? "simple" : "entangled") << "\n";
  } catch (const srank::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
