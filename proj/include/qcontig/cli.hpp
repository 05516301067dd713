#pragma once

#include <qcontig/relations.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qcontig {

// Exit codes of every subcommand.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitNotConverged = 3 };

// `args` excludes the program name. `mutation`, when set, perturbs one
// coefficient in every verification run (used by the mutant build).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<Mutation>& mutation = std::nullopt);

// Complex literal: RE, RE+IMi or RE-IMi (also +i / -i). Throws DomainViolation.
cplx parse_complex(std::string_view text);

}  // namespace qcontig
