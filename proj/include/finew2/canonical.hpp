#pragma once

#include <string>

#include "finew2/geometry.hpp"

namespace finew2 {

// Byte encoding: tag 'L' (lattice) or 'H' (half-integral, doubled coords),
// then a 4-byte big-endian vertex count, then per vertex two 8-byte big-endian
// signed coordinates. Bit-exact; used in frontier and checkpoint files.
using CanonicalKey = std::string;

CanonicalKey encode_key(char tag, const Polygon& p);
char key_tag(const CanonicalKey& k);
Polygon polygon_from_key(const CanonicalKey& k);  // throws on malformed keys

std::string key_to_hex(const CanonicalKey& k);
CanonicalKey key_from_hex(const std::string& hex);  // throws on malformed input

struct PolygonCanon {
    Polygon canonical;
    AffineMap map;  // apply_map(map, input) == canonical
};

struct HalfCanon {
    HalfPolygon canonical;
    AffineMap map;  // acts on doubled coordinates; translation is even
};

// Canonical representative under the affine unimodular group. Lex-min of the
// serialized candidate images; idempotent.
PolygonCanon canonical_form(const Polygon& p);

// Canonical representative of a half-integral polygon: unimodular linear maps
// plus even translations of the doubled polygon.
HalfCanon canonical_form_half(const HalfPolygon& q);

CanonicalKey lattice_key(const Polygon& p);
CanonicalKey half_key(const HalfPolygon& q);

bool are_equivalent(const Polygon& p, const Polygon& q);
bool are_equivalent(const HalfPolygon& p, const HalfPolygon& q);

}  // namespace finew2
