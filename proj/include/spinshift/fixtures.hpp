// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <vector>

namespace spinshift::fixtures {

// Writes the synthetic input bundle used by the examples, the CLI smoke runs
// and the determinism checks. All content is computed from fixed constants,
// so repeated invocations are byte-identical.
std::vector<std::filesystem::path> write_bundle(const std::filesystem::path& directory);

} // namespace spinshift::fixtures
