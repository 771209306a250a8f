#pragma once

#include <filesystem>

#ifndef OBK_TEST_DATA_DIR
#error "OBK_TEST_DATA_DIR must be defined"
#endif

inline std::filesystem::path test_data_dir() { return OBK_TEST_DATA_DIR; }
