#pragma once

namespace qm::detail {
__extension__ typedef __int128 i128;
}
