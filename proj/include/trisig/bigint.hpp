#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace trisig {

using bigint = boost::multiprecision::cpp_int;

}
