#pragma once

#include "bgsig/ring.hpp"
#include "bgsig/sampling.hpp"

namespace bgsig {

// (rho, t): rho expands to A, t = A*s1 + s2.
struct PublicKey {
  Seed rho;
  PolyVec t;

  bool operator==(const PublicKey&) const = default;
};

// key is the signing derandomizer; s1 and s2 have coefficients in [-eta, eta].
struct SecretKey {
  Seed rho;
  Seed key;
  PolyVec t;
  PolyVec s1;
  PolyVec s2;

  bool operator==(const SecretKey&) const = default;
};

struct KeyPair {
  PublicKey pk;
  SecretKey sk;
};

struct Signature {
  CHash c_hash;
  PolyVec z;

  bool operator==(const Signature&) const = default;
};

} // namespace bgsig
