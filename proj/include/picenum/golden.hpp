#pragma once

#include <string_view>

namespace picenum::golden {

// Checked-in transcriptions of the published closed-form tables, in the same
// JSON schema as render(..., json).  Transcribed by hand and reviewed; the
// table verification suite is a pure equality check against these.

// Weight-zero generating function, 2 <= g <= 9.
std::string_view weight_zero(int g);

// Topological generating function, 2 <= g <= 4.
std::string_view topological(int g);

}  // namespace picenum::golden
