#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gwbinom {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace gwbinom
