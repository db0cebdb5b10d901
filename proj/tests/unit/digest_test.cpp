#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "wellconn/digest.hpp"

using namespace wellconn;

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Sha256, IncrementalEqualsOneShot) {
  Sha256 h;
  h.update("a").update("b").update("c");
  EXPECT_EQ(h.finish(), sha256_hex("abc"));
}

TEST(Sha256, FileDigest) {
  const std::string path = ::testing::TempDir() + "wellconn_digest.txt";
  std::ofstream(path, std::ios::binary) << "abc";
  EXPECT_EQ(sha256_file(path), sha256_hex("abc"));
  std::remove(path.c_str());
  EXPECT_ANY_THROW(sha256_file(path));
}
