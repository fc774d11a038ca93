#include "berge/hamilton.hpp"

namespace berge {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::found: return "found";
    case SolveStatus::not_found: return "not_found";
    case SolveStatus::precondition_failed: return "precondition_failed";
    case SolveStatus::search_exhausted: return "search_exhausted";
  }
  return "unknown";
}

int exit_code(SolveStatus s) {
  switch (s) {
    case SolveStatus::found: return 0;
    case SolveStatus::not_found: return 3;
    case SolveStatus::precondition_failed: return 4;
    case SolveStatus::search_exhausted: return 5;
  }
  return 5;
}

StageFailed::StageFailed(std::string stage, std::string cause)
    : std::runtime_error(stage + ": " + cause), stage_(std::move(stage)), cause_(std::move(cause)) {}

}  // namespace berge
