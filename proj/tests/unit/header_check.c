/* Compile-only check that the public header is valid C. */
#include <winding/winding.h>

int winding_header_is_c_compatible(void) { return WN_OK; }
