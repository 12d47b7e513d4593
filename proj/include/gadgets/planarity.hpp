#pragma once

/// @file planarity.hpp
/// @brief Genus test for systems with rotation data, by face tracing.

#include "gadgets/system.hpp"

namespace gadgets {

/// True iff every connected component of the instance/connection graph has
/// genus 0 under the system's rotation data (Euler check V - E + F = 2).
/// Throws ValidationError when the system carries no rotation data.
bool check_planarity(const SystemOfGadgets& sys);

}  // namespace gadgets
