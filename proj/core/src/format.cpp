#include "regress/format.hpp"

#include <charconv>
#include <system_error>

#include "regress/errors.hpp"

namespace regress {

std::string format_double(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    if (result.ec != std::errc()) throw Error("format_double: conversion failed");
    return std::string(buf, result.ptr);
}

}  // namespace regress
