// convention.hpp
// Whether pair counts treat (x,y) and (y,x) as distinct.
#pragma once

namespace goldbach {

enum class Convention { ordered, unordered };

} // namespace goldbach
