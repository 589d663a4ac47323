#pragma once

namespace sigmarho {

// Size caps for the exhaustive oracles. Both defaults can be raised or lowered
// at once through the environment variable SIGMARHO_ORACLE_CAP (integer).
inline constexpr int kDefaultVertexCap = 24;  // subset enumeration over graphs
inline constexpr int kDefaultCspVarCap = 20;  // 0/1 assignment enumeration

int oracle_vertex_cap();
int oracle_csp_var_cap();

}  // namespace sigmarho
