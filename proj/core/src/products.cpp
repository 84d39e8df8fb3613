#include "etaq/products.hpp"

namespace etaq {

std::string JSymbol::to_string() const
{
    return std::string(barred ? "Jbar" : "J") + std::to_string(a) + "," + std::to_string(m);
}

}  // namespace etaq
