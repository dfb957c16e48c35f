#pragma once

namespace genchar {

// Worker count for the OpenMP kernels. 1 forces the serial reference paths;
// 0 means "use the OpenMP default". Thread-safe to read, set once up front.
void set_workers(int n);
int workers();
bool parallel_enabled();

} // namespace genchar
