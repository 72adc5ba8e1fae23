#ifndef HSCS_TESTS_SUPPORT_TEMPDIR_HPP
#define HSCS_TESTS_SUPPORT_TEMPDIR_HPP

#include <atomic>
#include <filesystem>
#include <string>

namespace hscs::testsupport {

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("hscs_test_" + tag + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace hscs::testsupport

#endif
