#include <iostream>

#include "pg10/cli.hpp"

int main(int argc, char** argv) {
  pg10::cli::RunConfig config;
  CLI::App app{"Projective plane of order 10: code and weight-15 verification"};
  pg10::cli::configure_parser(app, config);
  CLI11_PARSE(app, argc, argv);
  try {
    config.command = pg10::cli::command_of(app);
    pg10::cli::validate(config);
    return pg10::cli::run(config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
