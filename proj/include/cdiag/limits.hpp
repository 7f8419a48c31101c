#pragma once

#include <cstddef>

namespace cdiag {

struct Limits
{
    std::size_t chain_limit = 2'000'000;
    std::size_t scan_limit = 100'000;
    std::size_t table_limit = 20'000;
    std::size_t iso_limit = 512;
};

}
