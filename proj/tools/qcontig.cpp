#include <qcontig/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<qcontig::Mutation> mutation;
#ifdef QCONTIG_MUTANT_RELATION
  mutation = qcontig::Mutation{QCONTIG_MUTANT_RELATION, QCONTIG_MUTANT_TERM, 1.01};
#endif
  return qcontig::run_cli(args, std::cout, std::cerr, mutation);
}
